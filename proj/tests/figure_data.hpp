#pragma once

// Reference curves over GF(2) with m = 4; n = 2 and n = 4.

#include <cstddef>

struct CurvePoint {
  std::size_t n;
  const char* curve;
  double eta, value;
};

inline const CurvePoint kCurvePoints[] = {
    {2, "total-distance", 0.0000000000, 1.000000000},
    {2, "total-distance", 0.02000000000, 0.9793548387},
    {2, "total-distance", 0.04000000000, 0.9587096774},
    {2, "total-distance", 0.06000000000, 0.9380645161},
    {2, "total-distance", 0.08000000000, 0.9174193548},
    {2, "total-distance", 0.1000000000, 0.8967741936},
    {2, "total-distance", 0.1200000000, 0.8761290322},
    {2, "total-distance", 0.1400000000, 0.8554838710},
    {2, "total-distance", 0.1600000000, 0.8348387097},
    {2, "total-distance", 0.1800000000, 0.8141935484},
    {2, "total-distance", 0.2000000000, 0.7935483871},
    {2, "total-distance", 0.2200000000, 0.7729032258},
    {2, "total-distance", 0.2400000000, 0.7522580645},
    {2, "total-distance", 0.2600000000, 0.7316129032},
    {2, "total-distance", 0.2800000000, 0.7109677419},
    {2, "total-distance", 0.3000000000, 0.6903225806},
    {2, "total-distance", 0.3200000000, 0.6696774194},
    {2, "total-distance", 0.3400000000, 0.6490322581},
    {2, "total-distance", 0.3600000000, 0.6283870967},
    {2, "total-distance", 0.3800000000, 0.6077419355},
    {2, "total-distance", 0.4000000000, 0.5870967742},
    {2, "total-distance", 0.4200000000, 0.5664516129},
    {2, "total-distance", 0.4400000000, 0.5458064516},
    {2, "total-distance", 0.4600000000, 0.5251612903},
    {2, "total-distance", 0.4800000000, 0.5045161290},
    {2, "total-distance", 0.5000000000, 0.4838709677},
    {2, "total-distance", 0.5200000000, 0.4632258065},
    {2, "total-distance", 0.5400000000, 0.4425806451},
    {2, "total-distance", 0.5600000000, 0.4219354839},
    {2, "total-distance", 0.5800000000, 0.4012903226},
    {2, "total-distance", 0.6000000000, 0.3806451613},
    {2, "total-distance", 0.6200000000, 0.3600000000},
    {2, "total-distance", 0.6400000000, 0.3393548387},
    {2, "total-distance", 0.6600000000, 0.3187096774},
    {2, "total-distance", 0.6800000000, 0.2980645161},
    {2, "total-distance", 0.7000000000, 0.2774193548},
    {2, "total-distance", 0.7200000000, 0.2567741935},
    {2, "total-distance", 0.7400000000, 0.2361290323},
    {2, "total-distance", 0.7600000000, 0.2154838710},
    {2, "total-distance", 0.7800000000, 0.1948387097},
    {2, "total-distance", 0.8000000000, 0.1741935484},
    {2, "total-distance", 0.8200000000, 0.1535483871},
    {2, "total-distance", 0.8400000000, 0.1329032258},
    {2, "total-distance", 0.8600000000, 0.1122580645},
    {2, "total-distance", 0.8800000000, 0.09161290323},
    {2, "total-distance", 0.9000000000, 0.07096774194},
    {2, "total-distance", 0.9200000000, 0.05032258065},
    {2, "total-distance", 0.9400000000, 0.02967741936},
    {2, "total-distance", 0.9600000000, 0.009032258065},
    {2, "total-distance", 0.9700000000, 0.0000000000},
    {2, "total-distance", 0.9800000000, 0.0000000000},
    {2, "total-distance", 1.000000000, 0.0000000000},
    {2, "singleton", 0.0000000000, 1.000000000},
    {2, "singleton", 0.05000000000, 0.9500000000},
    {2, "singleton", 0.1000000000, 0.9000000000},
    {2, "singleton", 0.1500000000, 0.8500000000},
    {2, "singleton", 0.2000000000, 0.8000000000},
    {2, "singleton", 0.2500000000, 0.7500000000},
    {2, "singleton", 0.3000000000, 0.7000000000},
    {2, "singleton", 0.3500000000, 0.6500000000},
    {2, "singleton", 0.4000000000, 0.6000000000},
    {2, "singleton", 0.4500000000, 0.5500000000},
    {2, "singleton", 0.5000000000, 0.5000000000},
    {2, "singleton", 0.5500000000, 0.4500000000},
    {2, "singleton", 0.6000000000, 0.4000000000},
    {2, "singleton", 0.6500000000, 0.3500000000},
    {2, "singleton", 0.7000000000, 0.3000000000},
    {2, "singleton", 0.7500000000, 0.2500000000},
    {2, "singleton", 0.8000000000, 0.2000000000},
    {2, "singleton", 0.8500000000, 0.1500000000},
    {2, "singleton", 0.9000000000, 0.1000000000},
    {2, "singleton", 0.9500000000, 0.05000000000},
    {2, "singleton", 1.000000000, 0.0000000000},
    {2, "sphere-packing", 0.0000000000, 0.9991901700},
    {2, "sphere-packing", 0.02000000000, 0.9685637886},
    {2, "sphere-packing", 0.04000000000, 0.9422219636},
    {2, "sphere-packing", 0.06000000000, 0.9178098059},
    {2, "sphere-packing", 0.08000000000, 0.8946812896},
    {2, "sphere-packing", 0.1000000000, 0.8725241256},
    {2, "sphere-packing", 0.1200000000, 0.8511523975},
    {2, "sphere-packing", 0.1400000000, 0.8304506247},
    {2, "sphere-packing", 0.1600000000, 0.8103254350},
    {2, "sphere-packing", 0.1800000000, 0.7907163009},
    {2, "sphere-packing", 0.2000000000, 0.7715741341},
    {2, "sphere-packing", 0.2200000000, 0.7528584477},
    {2, "sphere-packing", 0.2400000000, 0.7345357839},
    {2, "sphere-packing", 0.2600000000, 0.7165822887},
    {2, "sphere-packing", 0.2800000000, 0.6989739825},
    {2, "sphere-packing", 0.3000000000, 0.6816928074},
    {2, "sphere-packing", 0.3200000000, 0.6647217487},
    {2, "sphere-packing", 0.3400000000, 0.6480473066},
    {2, "sphere-packing", 0.3600000000, 0.6316565776},
    {2, "sphere-packing", 0.3800000000, 0.6155397433},
    {2, "sphere-packing", 0.4000000000, 0.5996862992},
    {2, "sphere-packing", 0.4200000000, 0.5840882179},
    {2, "sphere-packing", 0.4400000000, 0.5687377465},
    {2, "sphere-packing", 0.4600000000, 0.5536284161},
    {2, "sphere-packing", 0.4800000000, 0.5387541372},
    {2, "sphere-packing", 0.5000000000, 0.5241092766},
    {2, "sphere-packing", 0.5200000000, 0.5096889919},
    {2, "sphere-packing", 0.5400000000, 0.4954889795},
    {2, "sphere-packing", 0.5600000000, 0.4815050485},
    {2, "sphere-packing", 0.5800000000, 0.4677338167},
    {2, "sphere-packing", 0.6000000000, 0.4541717806},
    {2, "sphere-packing", 0.6200000000, 0.4408161337},
    {2, "sphere-packing", 0.6400000000, 0.4276641518},
    {2, "sphere-packing", 0.6600000000, 0.4147133074},
    {2, "sphere-packing", 0.6800000000, 0.4019615156},
    {2, "sphere-packing", 0.7000000000, 0.3894067669},
    {2, "sphere-packing", 0.7200000000, 0.3770472228},
    {2, "sphere-packing", 0.7400000000, 0.3648812665},
    {2, "sphere-packing", 0.7600000000, 0.3529074378},
    {2, "sphere-packing", 0.7800000000, 0.3411244609},
    {2, "sphere-packing", 0.8000000000, 0.3295311938},
    {2, "sphere-packing", 0.8200000000, 0.3181265938},
    {2, "sphere-packing", 0.8400000000, 0.3069097437},
    {2, "sphere-packing", 0.8600000000, 0.2958798424},
    {2, "sphere-packing", 0.8800000000, 0.2850362055},
    {2, "sphere-packing", 0.9000000000, 0.2743782725},
    {2, "sphere-packing", 0.9080000000, 0.2701669779},
    {2, "sphere-covering", 0.0000000000, 0.9991901700},
    {2, "sphere-covering", 0.02000000000, 0.9422219636},
    {2, "sphere-covering", 0.04000000000, 0.8946812896},
    {2, "sphere-covering", 0.06000000000, 0.8511523975},
    {2, "sphere-covering", 0.08000000000, 0.8103254350},
    {2, "sphere-covering", 0.1000000000, 0.7715741341},
    {2, "sphere-covering", 0.1200000000, 0.7345357839},
    {2, "sphere-covering", 0.1400000000, 0.6989739825},
    {2, "sphere-covering", 0.1600000000, 0.6647217487},
    {2, "sphere-covering", 0.1800000000, 0.6316565776},
    {2, "sphere-covering", 0.2000000000, 0.5996862992},
    {2, "sphere-covering", 0.2200000000, 0.5687377465},
    {2, "sphere-covering", 0.2400000000, 0.5387541372},
    {2, "sphere-covering", 0.2600000000, 0.5096889919},
    {2, "sphere-covering", 0.2800000000, 0.4815050485},
    {2, "sphere-covering", 0.3000000000, 0.4541717806},
    {2, "sphere-covering", 0.3200000000, 0.4276641518},
    {2, "sphere-covering", 0.3400000000, 0.4019615156},
    {2, "sphere-covering", 0.3600000000, 0.3770472228},
    {2, "sphere-covering", 0.3800000000, 0.3529074378},
    {2, "sphere-covering", 0.4000000000, 0.3295311938},
    {2, "sphere-covering", 0.4200000000, 0.3069097437},
    {2, "sphere-covering", 0.4400000000, 0.2850362055},
    {2, "sphere-covering", 0.4600000000, 0.2639055542},
    {2, "sphere-covering", 0.4800000000, 0.2435143024},
    {2, "sphere-covering", 0.5000000000, 0.2238603634},
    {2, "sphere-covering", 0.5200000000, 0.2049430707},
    {2, "sphere-covering", 0.5400000000, 0.1867631133},
    {2, "sphere-covering", 0.5600000000, 0.1693225325},
    {2, "sphere-covering", 0.5800000000, 0.1526248329},
    {2, "sphere-covering", 0.6000000000, 0.1366750857},
    {2, "sphere-covering", 0.6200000000, 0.1214800942},
    {2, "sphere-covering", 0.6400000000, 0.1070486347},
    {2, "sphere-covering", 0.6600000000, 0.09339175001},
    {2, "sphere-covering", 0.6800000000, 0.08052312621},
    {2, "sphere-covering", 0.7000000000, 0.06845957069},
    {2, "sphere-covering", 0.7200000000, 0.05722161634},
    {2, "sphere-covering", 0.7400000000, 0.04683430142},
    {2, "sphere-covering", 0.7600000000, 0.03732818204},
    {2, "sphere-covering", 0.7800000000, 0.02874068021},
    {2, "sphere-covering", 0.8000000000, 0.02111791782},
    {2, "sphere-covering", 0.8200000000, 0.01451728138},
    {2, "sphere-covering", 0.8400000000, 0.009011130812},
    {2, "sphere-covering", 0.8600000000, 0.004692375583},
    {2, "sphere-covering", 0.8800000000, 0.001683275179},
    {2, "sphere-covering", 0.9000000000, 0.0001502111691},
    {2, "sphere-covering", 0.9080000000, 0.00000009},
    {4, "total-distance", 0.0000000000, 1.000000000},
    {4, "total-distance", 0.02000000000, 0.9796825397},
    {4, "total-distance", 0.04000000000, 0.9593650794},
    {4, "total-distance", 0.06000000000, 0.9390476191},
    {4, "total-distance", 0.08000000000, 0.9187301587},
    {4, "total-distance", 0.1000000000, 0.8984126984},
    {4, "total-distance", 0.1200000000, 0.8780952381},
    {4, "total-distance", 0.1400000000, 0.8577777778},
    {4, "total-distance", 0.1600000000, 0.8374603175},
    {4, "total-distance", 0.1800000000, 0.8171428571},
    {4, "total-distance", 0.2000000000, 0.7968253968},
    {4, "total-distance", 0.2200000000, 0.7765079365},
    {4, "total-distance", 0.2400000000, 0.7561904762},
    {4, "total-distance", 0.2600000000, 0.7358730159},
    {4, "total-distance", 0.2800000000, 0.7155555555},
    {4, "total-distance", 0.3000000000, 0.6952380952},
    {4, "total-distance", 0.3200000000, 0.6749206349},
    {4, "total-distance", 0.3400000000, 0.6546031746},
    {4, "total-distance", 0.3600000000, 0.6342857143},
    {4, "total-distance", 0.3800000000, 0.6139682540},
    {4, "total-distance", 0.4000000000, 0.5936507937},
    {4, "total-distance", 0.4200000000, 0.5733333333},
    {4, "total-distance", 0.4400000000, 0.5530158730},
    {4, "total-distance", 0.4600000000, 0.5326984127},
    {4, "total-distance", 0.4800000000, 0.5123809524},
    {4, "total-distance", 0.5000000000, 0.4920634921},
    {4, "total-distance", 0.5200000000, 0.4717460317},
    {4, "total-distance", 0.5400000000, 0.4514285714},
    {4, "total-distance", 0.5600000000, 0.4311111111},
    {4, "total-distance", 0.5800000000, 0.4107936508},
    {4, "total-distance", 0.6000000000, 0.3904761905},
    {4, "total-distance", 0.6200000000, 0.3701587302},
    {4, "total-distance", 0.6350000000, 0.3549206349},
    {4, "total-distance", 0.6400000000, 0.3498412698},
    {4, "total-distance", 0.6600000000, 0.3295238095},
    {4, "total-distance", 0.6800000000, 0.3092063492},
    {4, "total-distance", 0.7000000000, 0.2888888889},
    {4, "total-distance", 0.7200000000, 0.2685714286},
    {4, "total-distance", 0.7400000000, 0.2482539683},
    {4, "total-distance", 0.7600000000, 0.2279365079},
    {4, "total-distance", 0.7800000000, 0.2076190476},
    {4, "total-distance", 0.8000000000, 0.1873015873},
    {4, "total-distance", 0.8200000000, 0.1669841270},
    {4, "total-distance", 0.8400000000, 0.1466666667},
    {4, "total-distance", 0.8600000000, 0.1263492063},
    {4, "total-distance", 0.8800000000, 0.1060317460},
    {4, "total-distance", 0.9000000000, 0.08571428571},
    {4, "total-distance", 0.9200000000, 0.06539682540},
    {4, "total-distance", 0.9400000000, 0.04507936508},
    {4, "total-distance", 0.9600000000, 0.02476190476},
    {4, "total-distance", 0.9800000000, 0.004444444444},
    {4, "total-distance", 0.9850000000, 0.0000000000},
    {4, "total-distance", 1.000000000, 0.0000000000},
    {4, "singleton", 0.0000000000, 1.000000000},
    {4, "singleton", 0.05000000000, 0.9500000000},
    {4, "singleton", 0.1000000000, 0.9000000000},
    {4, "singleton", 0.1500000000, 0.8500000000},
    {4, "singleton", 0.2000000000, 0.8000000000},
    {4, "singleton", 0.2500000000, 0.7500000000},
    {4, "singleton", 0.3000000000, 0.7000000000},
    {4, "singleton", 0.3500000000, 0.6500000000},
    {4, "singleton", 0.4000000000, 0.6000000000},
    {4, "singleton", 0.4500000000, 0.5500000000},
    {4, "singleton", 0.5000000000, 0.5000000000},
    {4, "singleton", 0.5500000000, 0.4500000000},
    {4, "singleton", 0.6000000000, 0.4000000000},
    {4, "singleton", 0.6500000000, 0.3500000000},
    {4, "singleton", 0.7000000000, 0.3000000000},
    {4, "singleton", 0.7500000000, 0.2500000000},
    {4, "singleton", 0.8000000000, 0.2000000000},
    {4, "singleton", 0.8500000000, 0.1500000000},
    {4, "singleton", 0.9000000000, 0.1000000000},
    {4, "singleton", 0.9500000000, 0.05000000000},
    {4, "singleton", 1.000000000, 0.0000000000},
    {4, "sphere-packing", 0.0000000000, 0.9979878116},
    {4, "sphere-packing", 0.02000000000, 0.9652864923},
    {4, "sphere-packing", 0.04000000000, 0.9356936247},
    {4, "sphere-packing", 0.06000000000, 0.9081005868},
    {4, "sphere-packing", 0.08000000000, 0.8818384873},
    {4, "sphere-packing", 0.1000000000, 0.8565866759},
    {4, "sphere-packing", 0.1200000000, 0.8321875692},
    {4, "sphere-packing", 0.1400000000, 0.8084978859},
    {4, "sphere-packing", 0.1600000000, 0.7854541956},
    {4, "sphere-packing", 0.1800000000, 0.7629775825},
    {4, "sphere-packing", 0.2000000000, 0.7410229440},
    {4, "sphere-packing", 0.2200000000, 0.7195587615},
    {4, "sphere-packing", 0.2400000000, 0.6985478139},
    {4, "sphere-packing", 0.2600000000, 0.6779704938},
    {4, "sphere-packing", 0.2800000000, 0.6578013467},
    {4, "sphere-packing", 0.3000000000, 0.6380276462},
    {4, "sphere-packing", 0.3200000000, 0.6186297358},
    {4, "sphere-packing", 0.3400000000, 0.5995989586},
    {4, "sphere-packing", 0.3600000000, 0.5809226510},
    {4, "sphere-packing", 0.3800000000, 0.5625913579},
    {4, "sphere-packing", 0.4000000000, 0.5445965053},
    {4, "sphere-packing", 0.4200000000, 0.5269321959},
    {4, "sphere-packing", 0.4400000000, 0.5095905588},
    {4, "sphere-packing", 0.4600000000, 0.4925671917},
    {4, "sphere-packing", 0.4800000000, 0.4758557755},
    {4, "sphere-packing", 0.5000000000, 0.4594529975},
    {4, "sphere-packing", 0.5200000000, 0.4433546646},
    {4, "sphere-packing", 0.5400000000, 0.4275562278},
    {4, "sphere-packing", 0.5600000000, 0.4120554143},
    {4, "sphere-packing", 0.5800000000, 0.3968487454},
    {4, "sphere-packing", 0.6000000000, 0.3819336668},
    {4, "sphere-packing", 0.6200000000, 0.3673079383},
    {4, "sphere-packing", 0.6350000000, 0.3565271273},
    {4, "sphere-packing", 0.6400000000, 0.3529693600},
    {4, "sphere-packing", 0.6600000000, 0.3389159332},
    {4, "sphere-packing", 0.6800000000, 0.3251459812},
    {4, "sphere-packing", 0.7000000000, 0.3116581172},
    {4, "sphere-packing", 0.7200000000, 0.2984508573},
    {4, "sphere-packing", 0.7400000000, 0.2855230761},
    {4, "sphere-packing", 0.7600000000, 0.2728739310},
    {4, "sphere-packing", 0.7800000000, 0.2605024946},
    {4, "sphere-packing", 0.7900000000, 0.2544207454},
    {4, "sphere-packing", 0.7971380000, 0.2501218860},
    {4, "sphere-covering", 0.0000000000, 0.9979878116},
    {4, "sphere-covering", 0.005000000000, 0.9813775916},
    {4, "sphere-covering", 0.02000000000, 0.9356936247},
    {4, "sphere-covering", 0.04000000000, 0.8818384873},
    {4, "sphere-covering", 0.06000000000, 0.8321875692},
    {4, "sphere-covering", 0.08000000000, 0.7854541956},
    {4, "sphere-covering", 0.1000000000, 0.7410229440},
    {4, "sphere-covering", 0.1200000000, 0.6985478139},
    {4, "sphere-covering", 0.1400000000, 0.6578013467},
    {4, "sphere-covering", 0.1600000000, 0.6186297358},
    {4, "sphere-covering", 0.1800000000, 0.5809226510},
    {4, "sphere-covering", 0.2000000000, 0.5445965053},
    {4, "sphere-covering", 0.2200000000, 0.5095905588},
    {4, "sphere-covering", 0.2400000000, 0.4758557755},
    {4, "sphere-covering", 0.2400000000, 0.4758557755},
    {4, "sphere-covering", 0.2600000000, 0.4433546646},
    {4, "sphere-covering", 0.2800000000, 0.4120554143},
    {4, "sphere-covering", 0.3000000000, 0.3819336668},
    {4, "sphere-covering", 0.3200000000, 0.3529693600},
    {4, "sphere-covering", 0.3400000000, 0.3251459812},
    {4, "sphere-covering", 0.3600000000, 0.2984508573},
    {4, "sphere-covering", 0.3800000000, 0.2728739310},
    {4, "sphere-covering", 0.4000000000, 0.2484081597},
    {4, "sphere-covering", 0.4200000000, 0.2250488791},
    {4, "sphere-covering", 0.4400000000, 0.2027936717},
    {4, "sphere-covering", 0.4600000000, 0.1816422104},
    {4, "sphere-covering", 0.4800000000, 0.1615960553},
    {4, "sphere-covering", 0.5000000000, 0.1426585639},
    {4, "sphere-covering", 0.5200000000, 0.1248348018},
    {4, "sphere-covering", 0.5400000000, 0.1081315819},
    {4, "sphere-covering", 0.5600000000, 0.09255756540},
    {4, "sphere-covering", 0.5800000000, 0.07812342301},
    {4, "sphere-covering", 0.6000000000, 0.06484204925},
    {4, "sphere-covering", 0.6200000000, 0.05272875835},
    {4, "sphere-covering", 0.6400000000, 0.04180143034},
    {4, "sphere-covering", 0.6600000000, 0.03208055468},
    {4, "sphere-covering", 0.6800000000, 0.02358913905},
    {4, "sphere-covering", 0.7000000000, 0.01635248789},
    {4, "sphere-covering", 0.7200000000, 0.01039791105},
    {4, "sphere-covering", 0.7400000000, 0.005754503137},
    {4, "sphere-covering", 0.7600000000, 0.002453214555},
    {4, "sphere-covering", 0.7800000000, 0.0005275010607},
    {4, "sphere-covering", 0.7900000000, 0.00009198052045},
    {4, "sphere-covering", 0.7971380000, 0.0000000000},
};
