#pragma once

// zeta(1/2 + it) at t = 0.37 + 2i, computed once at 30 significant digits and
// frozen here.

namespace frozen {

struct ZetaSample {
  double t, re, im;
};

inline constexpr ZetaSample kZetaCritical[] = {
    {0.37,-0.7521039740590016,-0.92767063154286423},{2.37,0.48154090271498201,-0.21372380878294121},{4.37,0.63826321932520981,0.14589999362483138},{6.37,0.89975523398134544,0.36892914148288477},{8.37,1.3236216272302286,0.31474400893462009},{10.37,1.5298077977796724,-0.2528413689412419},{12.37,0.81081250601251731,-0.76338555599128143},{14.37,-0.011683141581218078,0.18957882834980674},{16.37,1.3284652046141677,1.209816580305571},{18.37,2.1880322988760599,-0.62323030554319798},{20.37,0.12482491197189898,-0.7359286553441375},{22.37,1.0796223711964658,0.61122905772134474},{24.37,0.5458081112029308,-0.55978095750638495},{26.37,1.1179485546869256,1.5573558527162689},{28.37,2.2763421796225062,-1.3127387317065732},{30.37,-0.034350348334175339,-0.06376003364744031},{32.37,0.55043354760386015,-0.32334244793556488},{34.37,1.3040846554645217,1.7888718369269401},{36.37,1.5714716919774066,-1.5763504408022307},{38.37,1.0880374806148622,0.70016818879934027},{40.37,0.24985442046484696,-0.78647162140581088},{42.37,1.0965573269338623,-0.0067487626535732386},{44.37,0.78597017605553776,2.043739811534651},{46.37,2.2377914806971571,-2.1839169501715267},{48.37,0.43964218047826557,0.15966472844353791},{50.37,0.13298242164091213,0.92869960826551137},{52.37,1.0089691467116752,-0.80351878545050457},{54.37,2.6225981323785336,0.89762185870122392},{56.37,-0.049558866873313516,-0.17529271933871425},{58.37,0.87987176058156682,-1.1467108805220449},{60.37,0.52791799988599032,-0.010863331619654756},{62.37,2.3348436156701604,2.6154856867955921},{64.37,0.20175346671126986,-1.9757165828545558},{66.37,0.78361572964231117,-0.62028403852274611},{68.37,1.5432378758562372,0.15443247446968273},{70.37,1.0869596549441433,1.212151941051685},{72.37,0.017977105445897433,0.9281459360108112},{74.37,1.8934643845887074,-2.4165340201280336},{76.37,0.6121248171487761,-0.15569642201147616},{78.37,1.2696136471214683,0.50980035421679832},{80.37,1.6514812209537193,2.5011128542100271},{82.37,-0.0049568925023662537,-1.6060300806546386},{84.37,0.37542329762501433,-0.60805880514758122},{86.37,1.593493635594648,-0.84008564656826666},{88.37,0.6560802884393949,0.015865155199287164},{90.37,3.6821775484979774,2.0639519368184741},{92.37,-0.2136991744177819,-0.31551422350277092},{94.37,-0.069033285732362772,-0.44943934688096874},{96.37,-0.2841485242411155,1.0294219233339092},{98.37,0.95978479268477196,-1.2107278674962517}};

inline constexpr double kZetaHalf = -1.46035450880958681;
inline constexpr double kFirstZero = 14.134725141734695;

}  // namespace frozen
