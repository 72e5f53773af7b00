// Copyright 2026 The qnmlab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Generated by tests/oracles/generate.py (mpmath at 40 digits). Do not edit.

#pragma once

#include <array>
#include <complex>

namespace qnmlab::oracle
{

using cd = std::complex<double>;

struct CylinderSample
{
  cd z, j0, y0, j1, y1, h0, h1;
};

inline constexpr std::array<CylinderSample, 37> cylinder_samples{{
    {{0.050000000000000003, 0}, {0.99937509764946864, 0}, {-1.9793110008172097, 0}, {0.024992188313759701, 0}, {-12.78985517117497, 0}, {0.99937509764946864, -1.9793110008172097}, {0.024992188313759701, -12.78985517117497}},
    {{0.5, 0}, {0.93846980724081286, 0}, {-0.44451873350670656, 0}, {0.2422684576748739, 0}, {-1.4714723926702431, 0}, {0.93846980724081286, -0.44451873350670656}, {0.2422684576748739, -1.4714723926702431}},
    {{1, 0}, {0.76519768655796661, 0}, {0.088256964215676956, 0}, {0.4400505857449335, 0}, {-0.78121282130028868, 0}, {0.76519768655796661, 0.088256964215676956}, {0.4400505857449335, -0.78121282130028868}},
    {{2.5, 0}, {-0.048383776468197998, 0}, {0.49807035961523188, 0}, {0.49709410246427405, 0}, {0.14591813796678579, 0}, {-0.048383776468197998, 0.49807035961523188}, {0.49709410246427405, 0.14591813796678579}},
    {{7.2999999999999998, 0}, {0.28821694763501438, 0}, {0.062773886374037594, 0}, {0.082570430493257838, 0}, {-0.28459437186807213, 0}, {0.28821694763501438, 0.062773886374037594}, {0.082570430493257838, -0.28459437186807213}},
    {{11.9, 0}, {0.025049441699589645, 0}, {-0.22983321394337505, 0}, {-0.22898324966192404, 0}, {-0.034711498334030609, 0}, {0.025049441699589645, -0.22983321394337505}, {-0.22898324966192404, -0.034711498334030609}},
    {{12.1, 0}, {0.069666773606807314, 0}, {-0.21843838055092549, 0}, {-0.21574897337692481, 0}, {-0.07873693145139575, 0}, {0.069666773606807314, -0.21843838055092549}, {-0.21574897337692481, -0.07873693145139575}},
    {{19, 0}, {0.1466294396596512, 0}, {-0.10951969138534148, 0}, {-0.10570143114240926, 0}, {-0.1495601138626533, 0}, {0.1466294396596512, -0.10951969138534148}, {-0.10570143114240926, -0.1495601138626533}},
    {{35, 0}, {-0.12684568275631258, 0}, {0.04579798719515564, 0}, {0.043990942179625639, 0}, {0.12751273354559012, 0}, {-0.12684568275631258, 0.04579798719515564}, {0.043990942179625639, 0.12751273354559012}},
    {{50, 0}, {0.055812327669251816, 0}, {-0.098064995470077077, 0}, {-0.097511828125175143, 0}, {-0.056795668562014769, 0}, {0.055812327669251816, -0.098064995470077077}, {-0.097511828125175143, -0.056795668562014769}},
    {{1, 1}, {0.93760847680602932, -0.49652994760912211}, {0.44547448893603253, 0.7101585820037345}, {0.61416033492290356, 0.36502802882708779}, {-0.65769453559134528, 0.62980100399288441}, {0.22744989480229474, -0.051055458673089617}, {-0.015640669069980771, -0.29266650676425743}},
    {{3, -2}, {-1.2492348796074222, 0.94798379205773475}, {1.0008031965548903, 1.2314416093034275}, {0.78014884857925382, 1.2609820602388484}, {1.2858493414635994, -0.72508125324193906}, {-2.4806764889108499, 1.948786988612625}, {1.5052301018211929, 2.5468314017024478}},
    {{0.29999999999999999, 0.01}, {0.97765040819834026, -0.0014832066793542178}, {-0.80693195222762126, 0.022923394288019691}, {0.14832437127547812, 0.0048323620947857849}, {-2.2908090521233695, 0.068286157587126667}, {0.95472701391032055, -0.80841515890697546}, {0.08003821368835147, -2.2859766900285834}},
    {{6, 4.5}, {9.5845168576745845, 9.130799085605025}, {-9.1339576562539389, 9.5839807430588859}, {-8.2452497177525199, 9.7166059866485188}, {-9.717325867583483, -8.2419910785489794}, {0.00053611461569757005, -0.0031585706489130273}, {-0.0032586392035393414, -0.00071988093496389482}},
    {{6, -4.5}, {9.5845168576745845, -9.130799085605025}, {-9.1339576562539389, -9.5839807430588859}, {-8.2452497177525199, -9.7166059866485188}, {-9.717325867583483, 8.2419910785489794}, {19.16849760073347, -18.264756741858964}, {-16.487240796301499, -19.433931854232004}},
    {{11.5, 3}, {-0.38207809328958436, 2.2931392214790582}, {-2.3036359636908288, -0.37740939689388719}, {-2.2968593378052597, -0.27945603020204896}, {0.28375536424585268, -2.2860557751588533}, {-0.0046686963956971972, -0.01049674221177057}, {-0.010803562646406617, 0.0042993340438036969}},
    {{12.5, 3}, {1.6512083712134402, 1.5112083813071804}, {-1.5203787831515252, 1.6450417910165103}, {-1.4448023762582165, 1.6888195630346448}, {-1.6953893543604668, -1.4357738045705348}, {0.0061665801969297777, -0.0091704018443449671}, {-0.0090285716876817839, -0.0065697913258220388}},
    {{11.5, -3}, {-0.38207809328958436, -2.2931392214790582}, {-2.3036359636908288, 0.37740939689388719}, {-2.2968593378052597, 0.27945603020204896}, {0.28375536424585268, 2.2860557751588533}, {-0.75948749018347161, -4.5967751851698866}, {-4.5829151129641126, 0.56321139444790169}},
    {{12.5, -3}, {1.6512083712134402, -1.5112083813071804}, {-1.5203787831515252, -1.6450417910165103}, {-1.4448023762582165, -1.6888195630346448}, {-1.6953893543604668, 1.4357738045705348}, {3.2962501622299505, -3.0315871644587058}, {-2.8805761808287511, -3.3842089173951115}},
    {{20, 5}, {11.57305816151333, -6.0480233138325916}, {6.0483005821346261, 11.57190897325237}, {6.2881238186496491, 11.363863418680365}, {-11.365013170631228, 6.2878179806304368}, {0.0011491882609597792, 0.00027726830203516825}, {0.00030583801921210669, -0.0011497519508627022}},
    {{20, -5}, {11.57305816151333, 6.0480233138325916}, {6.0483005821346261, -11.57190897325237}, {6.2881238186496491, -11.363863418680365}, {-11.365013170631228, -6.2878179806304368}, {23.1449671347657, 12.096323895967217}, {12.575941799280086, -22.728876589311593}},
    {{45, -0.20000000000000001}, {0.11813008061899144, 0.0057110527932951356}, {0.027655169909217285, -0.023258419671734476}, {0.028968975186948083, -0.023190560654156665}, {-0.11782897958544755, -0.0059684945255367786}, {0.14138850029072592, 0.033366222702512417}, {0.034937469712484862, -0.14101954023960422}},
    {{2.6000000000000001, -0.0040000000000000001}, {-0.096807177510985817, 0.0018832762051681747}, {0.48133386165354058, 0.00075345756686140126}, {0.47082062084192161, 0.0011115583352904086}, {0.18836608644628092, -0.0016355342901719508}, {-0.097560635077847208, 0.48321713785870879}, {0.47245615513209355, 0.18947764478157131}},
    {{4.2000000000000002, -0.070000000000000007}, {-0.37739899963175522, -0.0097174416332532244}, {-0.094195789268619073, 0.025778276383338156}, {-0.13916798514206721, 0.024062947483324749}, {0.3687577462799479, 0.012708895982472568}, {-0.40317727601509334, -0.10391323090187229}, {-0.15187688112453979, 0.39282069376327261}},
    {{12, 0.5}, {0.056196719559848042, 0.11628499388496207}, {-0.25335159025445403, 0.03013738214051653}, {-0.25103191962679211, 0.034912781963125084}, {-0.066721254222334617, -0.11469208184097679}, {0.026059337419331516, -0.13706659636949192}, {-0.13633983778581535, -0.031808472259209533}},
    {{-3, 1}, {-0.46049214388225845, 0.36956500001486359}, {-0.22325478042355687, -0.53109749292410957}, {-0.43261563940523967, -0.42950578688424357}, {0.33415052132152651, -0.57725619205556034}, {0.07060534904185109, 0.14631021959130672}, {0.14464055265032069, -0.095355265562717048}},
    {{-0.69999999999999996, -0.20000000000000001}, {0.88944512564356959, -0.066126377174681283}, {-0.29616712723413396, -1.5621847159440541}, {-0.33390960915708295, -0.082643566957686779}, {0.8809268658399636, 0.40938267136776951}, {2.4516298415876236, -0.36229350440881525}, {-0.74329228052485252, 0.79828329888227678}},
    {{0, 1}, {1.2660658777520084, 0}, {-0.26803248203398855, 1.2660658777520084}, {0, 0.56515910399248503}, {-0.56515910399248503, 0.38318604387456484}, {0, -0.26803248203398855}, {-0.38318604387456484, 0}},
    {{0, 8}, {427.5641157218048, 0}, {-9.3246147017467842e-05, 427.5641157218048}, {0, 399.8731367825601}, {-399.8731367825601, 9.8911112252230354e-05}, {0, -9.3246147017467842e-05}, {-9.8911112252230354e-05, 0}},
    {{0, -5}, {27.239871823604446, 0}, {-0.002349826181204555, -27.239871823604446}, {0, -24.335642142450528}, {-24.335642142450528, -0.0025748808909586158}, {54.479743647208892, -0.002349826181204555}, {0.0025748808909586158, -48.671284284901056}},
    {{30, 0.29999999999999999}, {-0.090102880101367258, 0.036173973593017189}, {-0.1227421527960392, -0.02569068983636873}, {-0.12425436262440041, -0.025076235343676576}, {0.088066059016417592, -0.036586815830353336}, {-0.064412190264998531, -0.086568179203022011}, {-0.087667546794047077, 0.062989823672741016}},
    {{-20, -3}, {1.6225953170176561, -0.74752994552545204}, {-0.74505290565516158, -1.6310645181062597}, {-0.78728265020734556, -1.5903221371824245}, {-1.5818797729571143, 0.7899756822153815}, {3.2536598351239161, -1.4925828511806136}, {-1.5772583324227269, -3.1722019101395387}},
    {{-15, 2}, {-0.10246827747721027, 0.73758976967500356}, {-0.7098689869035425, -0.10255307656247291}, {-0.75913341907093357, -0.12623171752681542}, {0.12524344397539605, -0.78698662732698388}, {8.4799085262646484e-05, 0.027720782771461141}, {0.027853208256050237, -0.00098827355141937025}},
    {{-8, 4}, {2.9929102421483371, 6.6845821112913368}, {-6.6815008406913803, 2.996660971062644}, {-6.681169261336942, 2.575497113705902}, {-2.5717998901971897, -6.6845127818213248}, {-0.0037507289143066014, 0.0030812705999562406}, {0.0033435204843830541, 0.0036972235087121583}},
    {{5, 4.9000000000000004}, {-2.5418393320192427, 20.339490210648066}, {-20.340873986071053, -2.5401061195985144}, {-19.469114462343253, -1.3202448009661838}, {1.3219970082381785, -19.467577306293339}, {-0.0017332124207279651, -0.0013837754229869288}, {-0.0015371560499143112, 0.0017522072719946408}},
    {{-40, -4.9000000000000004}, {-0.021496062912387589, -8.4416624016961403}, {-8.4407334971977548, 0.021384695799418665}, {-8.4302268351035821, 0.12567887858520746}, {0.1257790011829904, 8.431158578892731}, {-0.042880758711806258, -16.882395898893897}, {-16.861385413996313, 0.25145787976819783}},
    {{2.1000000000000001, 1.5}, {0.022425463142646589, -1.0923157450253453}, {1.1812696933551474, -0.038216932391208575}, {1.0767204067553076, -0.23111101122419708}, {0.17623040198999732, 0.9689293805402448}, {0.060642395533855163, 0.088953948329801857}, {0.1077910262150627, -0.054880609234199788}},
}};

inline constexpr std::array<double, 5> gauss_nodes_5{-0.90617984593866396, -0.53846931010568311, 0, 0.53846931010568311, 0.90617984593866396};
inline constexpr std::array<double, 5> gauss_weights_5{0.23692688505618942, 0.47862867049936619, 0.568888888888889, 0.47862867049936619, 0.23692688505618942};
inline constexpr std::array<double, 12> gauss_nodes_12{-0.98156063424671924, -0.9041172563704748, -0.76990267419430469, -0.58731795428661748, -0.36783149899818018, -0.12523340851146891, 0.12523340851146891, 0.36783149899818018, 0.58731795428661748, 0.76990267419430469, 0.9041172563704748, 0.98156063424671924};
inline constexpr std::array<double, 12> gauss_weights_12{0.047175336386512022, 0.10693932599531888, 0.16007832854334611, 0.20316742672306565, 0.23349253653835464, 0.24914704581340269, 0.24914704581340269, 0.23349253653835464, 0.20316742672306565, 0.16007832854334611, 0.10693932599531888, 0.047175336386512022};

struct DiskSample
{
  cd k;
  double radius, rho;
  cd integral;
};

inline constexpr std::array<DiskSample, 6> disk_samples{{
    {{2.7000000000000002, 0}, 0.02, 0, {0.00070662823642390806, 0.00031404476821900363}},
    {{2.7000000000000002, 0}, 0.02, 0.010999999999999999, {0.00067622408524983812, 0.00031397551809952338}},
    {{2.7000000000000002, 0}, 0.02, 0.050000000000000003, {0.00042069112483540661, 0.0003126155307652754}},
    {{1.3, -0.050000000000000003}, 0.40000000000000002, 0.10000000000000001, {0.092882039684381815, 0.12435588407321597}},
    {{1.3, -0.050000000000000003}, 0.40000000000000002, 0.90000000000000002, {-0.028404093679175121, 0.08680037225362075}},
    {{9, 0}, 0.14999999999999999, 0, {0.0010971981681039346, 0.013940040224298931}},
}};

// Lowest slab mode: f = exp(-i w x) on the left. Norm with boundaries at -d and 1 + d.
struct SlabNormSample
{
  double index, d;
  cd omega, norm, f_right;
};

inline constexpr std::array<SlabNormSample, 4> slab_norm_samples{{
    {2, 0, {1.5707963267948966, -0.54930614433405489}, {1.5, -1.1479437019748901e-41}, {-1, 2.0670321098263988e-43}},
    {2, 0.69999999999999996, {1.5707963267948966, -0.54930614433405489}, {1.5, -2.2958874039497803e-41}, {-1, 2.0670321098263988e-43}},
    {3.3999999999999999, 0, {0.92399783929111567, -0.17827523634421047}, {5.2799999999999994, 0}, {-1, 1.2159012410743522e-43}},
    {3.3999999999999999, 2.2999999999999998, {0.92399783929111567, -0.17827523634421047}, {5.2799999999999994, -1.1479437019748901e-41}, {-1, 1.2159012410743522e-43}},
}};

}  // namespace qnmlab::oracle
