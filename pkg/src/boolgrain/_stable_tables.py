"""Quantile summaries of the S1 stable family on an (alpha, beta) grid.

Generated by tools/make_stable_tables.py from this package's own CDF
inversion; quantile levels (0.02, 0.25, 0.5, 0.75, 0.98).
Do not edit by hand.
"""

ALPHAS = [
    1.02, 1.04, 1.06, 1.08, 1.1, 1.12, 1.14, 1.16, 1.18, 1.2, 1.22, 1.24, 1.26, 1.28, 1.3, 1.32, 1.34, 1.36, 1.38, 1.4, 1.42, 1.44, 1.46, 1.48, 1.5, 1.52, 1.54, 1.56, 1.58, 1.6, 1.62, 1.64, 1.66, 1.68, 1.7, 1.72, 1.74, 1.76, 1.78, 1.8, 1.82, 1.84, 1.86, 1.88, 1.9, 1.92, 1.94, 1.96, 1.98, 2,
]

BETAS = [
    0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1,
]

NU_ALPHA = [
    [14.951348, 14.864109, 14.60974, 14.212373, 13.713134, 13.162002, 12.603921, 12.073157, 11.600703, 11.276224, 11.207534],
    [14.092915, 14.014461, 13.785747, 13.428335, 12.978237, 12.478846, 11.969982, 11.483263, 11.049424, 10.761482, 10.702167],
    [13.309417, 13.238649, 13.032375, 12.709748, 12.302207, 11.847354, 11.380247, 10.929747, 10.525792, 10.262693, 10.208761],
    [12.592392, 12.528461, 12.342195, 12.050529, 11.680882, 11.265905, 10.836492, 10.419043, 10.042784, 9.802693, 9.7531185],
    [11.934521, 11.87674, 11.708382, 11.444403, 11.108698, 10.729657, 10.334515, 9.947509, 9.5972909, 9.3787113, 9.3329557],
    [11.329454, 11.277207, 11.124914, 10.885778, 10.5806, 10.234047, 9.8702099, 9.5113556, 9.1857545, 8.9872842, 8.9449416],
    [10.77166, 10.724398, 10.586558, 10.36977, 10.092095, 9.7749922, 9.4398244, 9.107093, 8.8049354, 8.6251694, 8.5859173],
    [10.256302, 10.213536, 10.088717, 9.8920422, 9.6392107, 9.3488987, 9.0400563, 8.7316405, 8.4519005, 8.2894546, 8.2530217],
    [9.77914, 9.7404315, 9.6273613, 9.4488306, 9.2184877, 8.9525825, 8.6679663, 8.382254, 8.1240485, 7.9775513, 7.9437316],
    [9.3364432, 9.3014001, 9.1989396, 9.0368065, 8.8268412, 8.5832331, 8.3209712, 8.0565414, 7.8190583, 7.6871832, 7.6557931],
    [8.9249201, 8.8931882, 8.8003163, 8.6530292, 8.4615745, 8.2383627, 7.9967892, 7.7523537, 7.5348304, 7.4162832, 7.3871887],
    [8.5416584, 8.5129206, 8.4287262, 8.2948882, 8.120292, 7.915781, 7.6933874, 7.4678192, 7.2694889, 7.1630697, 7.136134],
    [8.184075, 8.1580487, 8.0817111, 7.9600866, 7.8008585, 7.6135333, 7.4089694, 7.2012737, 7.0213175, 6.9259233, 6.9010489],
    [7.8498731, 7.8263017, 7.7570878, 7.646563, 7.5013813, 7.3298858, 7.1419422, 6.9512373, 6.7887921, 6.703401, 6.6805049],
    [7.5370061, 7.5156608, 7.4529151, 7.3524946, 7.2201683, 7.063293, 6.8908921, 6.7163993, 6.570524, 6.494228, 6.4732236],
    [7.2436469, 7.224322, 7.1674543, 7.0762516, 6.955719, 6.8123729, 6.6545554, 6.4955695, 6.3652661, 6.2972401, 6.2780744],
    [6.9681611, 6.9506729, 6.8991565, 6.8163755, 6.7066867, 6.5758972, 6.4318098, 6.2876845, 6.1719031, 6.1114064, 6.0940249],
    [6.709085, 6.6932683, 6.6466327, 6.571563, 6.4718659, 6.3527682, 6.2216546, 6.0917558, 5.9894246, 5.9358024, 5.9201474],
    [6.4651059, 6.4508137, 6.4086388, 6.3406446, 6.2501836, 6.1420046, 6.0231933, 5.906879, 5.8169229, 5.7695857, 5.7556144],
    [6.235046, 6.2221475, 6.1840583, 6.1225747, 6.0406752, 5.9427318, 5.8356167, 5.7322124, 5.6535776, 5.6119954, 5.5996636],
    [6.0178481, 6.0062268, 5.9718899, 5.9164159, 5.8424799, 5.7541664, 5.6581907, 5.5669799, 5.4986479, 5.4623433, 5.4516102],
    [5.8125638, 5.8021165, 5.771237, 5.7213287, 5.6548284, 5.5756069, 5.4902398, 5.4104574, 5.3514669, 5.3200066, 5.3108335],
    [5.6183432, 5.6089787, 5.5812969, 5.536563, 5.4770332, 5.4064218, 5.331138, 5.2619804, 5.2114301, 5.1844183, 5.1767629],
    [5.4344266, 5.4260648, 5.4013525, 5.3614498, 5.3084805, 5.2460381, 5.180296, 5.1209342, 5.077989, 5.0550649, 5.0488811],
    [5.2601374, 5.2527086, 5.2307663, 5.1953948, 5.1486218, 5.0939303, 5.037162, 4.9867581, 4.9506471, 4.9314758, 4.9267195],
    [5.0948764, 5.0883199, 5.0689745, 5.0378703, 4.9969636, 4.9496117, 4.9012131, 4.858938, 4.8289548, 4.8132245, 4.8098432],
    [4.9381169, 4.9323803, 4.9154803, 4.8884096, 4.85306, 4.8126242, 4.7719614, 4.7370065, 4.7125026, 4.6999211, 4.6978597],
    [4.7894011, 4.7844383, 4.7698501, 4.7465989, 4.7165029, 4.6825366, 4.6489499, 4.6205408, 4.6009201, 4.591211, 4.5904089],
    [4.6483358, 4.6441058, 4.6317074, 4.6120697, 4.5869147, 4.5589409, 4.5317564, 4.5091576, 4.4938724, 4.4867726, 4.4871615],
    [4.514589, 4.5110531, 4.5007263, 4.4844924, 4.4639435, 4.4414525, 4.4199945, 4.4025135, 4.3910579, 4.3863135, 4.3878185],
    [4.3878843, 4.3850033, 4.3766249, 4.3635685, 4.3472593, 4.3297143, 4.3133152, 4.300303, 4.2922065, 4.2895714, 4.2921089],
    [4.267994, 4.2657247, 4.2591577, 4.2490252, 4.2365545, 4.2233978, 4.2114065, 4.202256, 4.1970794, 4.1963119, 4.199789],
    [4.1547295, 4.1530218, 4.1481079, 4.1406123, 4.1315455, 4.1222082, 4.113997, 4.1081401, 4.1054695, 4.1063305, 4.110643],
    [4.0479291, 4.0467237, 4.0432793, 4.0380996, 4.0319752, 4.0258872, 4.020855, 4.017759, 4.0172012, 4.0194517, 4.0244835],
    [3.9474434, 3.9466719, 3.9444889, 3.9412757, 3.9376162, 3.9342157, 3.9317908, 3.9309549, 3.9321337, 3.9355325, 3.9411545],
    [3.853121, 3.8527074, 3.8515601, 3.8499471, 3.8482726, 3.8470159, 3.8466578, 3.8476098, 3.8501625, 3.8544651, 3.8605334],
    [3.7647944, 3.7646594, 3.7643153, 3.7639354, 3.7637787, 3.7641496, 3.765352, 3.7676471, 3.771223, 3.7761807, 3.7825366],
    [3.6822708, 3.6823367, 3.6825703, 3.6830729, 3.6839958, 3.685516, 3.6878106, 3.6910326, 3.6952933, 3.7006539, 3.7071243],
    [3.6053262, 3.605522, 3.6061279, 3.6071961, 3.6088047, 3.6110448, 3.6140078, 3.6177724, 3.6223955, 3.6279066, 3.6343064],
    [3.5337061, 3.5339713, 3.5347745, 3.5361382, 3.5380958, 3.5406857, 3.5439461, 3.5479087, 3.5525943, 3.5580098, 3.5641473],
    [3.4671293, 3.4674159, 3.4682782, 3.4697225, 3.4717584, 3.4743962, 3.4776448, 3.4815096, 3.4859907, 3.4910813, 3.4967673],
    [3.405295, 3.4055686, 3.4063893, 3.4077569, 3.4096704, 3.4121276, 3.4151247, 3.4186553, 3.4227101, 3.4272766, 3.4323386],
    [3.3478912, 3.3481296, 3.3488441, 3.3500323, 3.3516904, 3.3538128, 3.3563924, 3.3594199, 3.3628845, 3.3667733, 3.3710717],
    [3.2946035, 3.2947951, 3.295369, 3.2963234, 3.2976545, 3.2993577, 3.3014267, 3.303854, 3.306631, 3.3097478, 3.3131935],
    [3.2451219, 3.2452634, 3.2456873, 3.2463925, 3.2473767, 3.2486369, 3.2501692, 3.2519691, 3.2540313, 3.2563496, 3.2589175],
    [3.1991471, 3.1992414, 3.1995242, 3.1999948, 3.2006522, 3.201495, 3.2025214, 3.2037291, 3.2051157, 3.2066782, 3.2084134],
    [3.1563944, 3.1564488, 3.1566121, 3.156884, 3.1572641, 3.157752, 3.158347, 3.1590484, 3.1598553, 3.1607666, 3.1617814],
    [3.1165967, 3.1166212, 3.1166948, 3.1168175, 3.1169891, 3.1172095, 3.1174787, 3.1177965, 3.1181627, 3.118577, 3.1190392],
    [3.0795057, 3.0795119, 3.0795304, 3.0795612, 3.0796044, 3.0796599, 3.0797277, 3.0798079, 3.0799003, 3.080005, 3.080122],
    [3.0448927, 3.0448927, 3.0448927, 3.0448927, 3.0448927, 3.0448927, 3.0448927, 3.0448927, 3.0448927, 3.0448927, 3.0448927],
]

NU_BETA = [
    [-1.1912427e-16, 0.10461942, 0.20878802, 0.3120613, 0.41397385, 0.51395613, 0.61118266, 0.70421514, 0.78973591, 0.85238847, 0.87277958],
    [-8.8681112e-16, 0.10254672, 0.20472589, 0.30617377, 0.40650028, 0.50521719, 0.60157695, 0.69420348, 0.77974531, 0.84198433, 0.86332376],
    [-2.487207e-15, 0.10051979, 0.20074168, 0.30037063, 0.39908513, 0.49646513, 0.59184063, 0.68389774, 0.76924506, 0.83083512, 0.85312334],
    [-9.2552906e-16, 0.098536238, 0.19683836, 0.29467139, 0.39177711, 0.48780135, 0.58213876, 0.67353147, 0.75851643, 0.81929793, 0.84251739],
    [1.8062382e-15, 0.096593008, 0.19300894, 0.28906999, 0.38457226, 0.47922025, 0.57246897, 0.66310574, 0.74755662, 0.80740007, 0.83153234],
    [-3.1766473e-16, 0.094686643, 0.18924802, 0.28355655, 0.37745998, 0.47071368, 0.56282524, 0.65261436, 0.73635203, 0.7951556, 0.8201777],
    [-1.7568954e-15, 0.092814163, 0.18554955, 0.27812456, 0.37043117, 0.46227144, 0.55319627, 0.64204568, 0.72488143, 0.78257544, 0.8084598],
    [-2.6398487e-15, 0.090972827, 0.18190843, 0.27276568, 0.36347676, 0.45388339, 0.54357365, 0.63138955, 0.71312476, 0.76966953, 0.79638358],
    [7.3931744e-16, 0.089159754, 0.17831886, 0.26747248, 0.35658747, 0.44553924, 0.53394479, 0.62063252, 0.70106381, 0.75644684, 0.78395477],
    [6.7843781e-16, 0.087371565, 0.17477508, 0.26223641, 0.34975331, 0.43722938, 0.52429882, 0.60975918, 0.68868405, 0.74291669, 0.77117741],
    [-1.6241434e-15, 0.085605622, 0.17127135, 0.25705006, 0.342965, 0.42894107, 0.5146231, 0.59875246, 0.67597738, 0.72908637, 0.75805612],
    [0, 0.083858885, 0.16780196, 0.25190503, 0.33621182, 0.42066356, 0.5049026, 0.58759265, 0.66294125, 0.71496379, 0.74459451],
    [1.8859283e-15, 0.082128278, 0.16436093, 0.24679258, 0.32948291, 0.41238202, 0.49512121, 0.57625641, 0.64957865, 0.70055591, 0.73079655],
    [1.5050663e-15, 0.080410821, 0.16094227, 0.24170425, 0.32276712, 0.40408389, 0.48526123, 0.56471818, 0.63589673, 0.68586875, 0.71666505],
    [3.6207972e-16, 0.078703235, 0.15753982, 0.2366305, 0.31605178, 0.39575284, 0.47530231, 0.55295274, 0.62190453, 0.67090807, 0.7022027],
    [-2.5138654e-16, 0.077002065, 0.15414668, 0.2315613, 0.30932416, 0.38737185, 0.46522155, 0.54093412, 0.60761219, 0.65567829, 0.68741192],
    [2.1577721e-15, 0.07530397, 0.15075596, 0.22648628, 0.30256951, 0.37892236, 0.45499425, 0.5286393, 0.59303036, 0.64018337, 0.67229424],
    [1.2913852e-15, 0.07360508, 0.14736, 0.22139389, 0.29577229, 0.37038339, 0.44459348, 0.51604931, 0.57816926, 0.6244267, 0.65685075],
    [-2.1176485e-16, 0.071901388, 0.14395077, 0.21627173, 0.28891528, 0.36173212, 0.43398987, 0.50315061, 0.56303739, 0.60841054, 0.64108192],
    [-4.3949246e-16, 0.07018844, 0.14051922, 0.21110627, 0.28197966, 0.35294291, 0.42315386, 0.48993417, 0.54764278, 0.59213617, 0.62498736],
    [-1.2151796e-15, 0.068461466, 0.13705575, 0.20588224, 0.27494414, 0.34398833, 0.41205711, 0.47639747, 0.53199159, 0.57560408, 0.6085663],
    [3.9343907e-16, 0.066715193, 0.13354948, 0.20058309, 0.26778571, 0.33483903, 0.4006732, 0.462541, 0.51608906, 0.55881413, 0.59181682],
    [2.4439622e-16, 0.064943687, 0.12998846, 0.19519035, 0.26047869, 0.3254643, 0.3889802, 0.44836836, 0.4999387, 0.54176488, 0.57473646],
    [5.0568389e-16, 0.063140416, 0.12635938, 0.18968345, 0.25299593, 0.31583395, 0.37696114, 0.43388528, 0.48354272, 0.52445422, 0.5573219],
    [-1.5683818e-15, 0.061298047, 0.12264738, 0.18403996, 0.24530822, 0.30591918, 0.36460458, 0.41909824, 0.46690219, 0.50687906, 0.53956913],
    [8.1016883e-16, 0.059408457, 0.11883617, 0.17823578, 0.23738633, 0.29569517, 0.3519048, 0.40401396, 0.4500171, 0.4890355, 0.52147299],
    [1.9516909e-15, 0.057462678, 0.114908, 0.17224545, 0.22920184, 0.28514159, 0.33886075, 0.38863907, 0.43288634, 0.47091875, 0.50302774],
    [-1.2465176e-15, 0.055451018, 0.11084413, 0.16604369, 0.2207291, 0.27424451, 0.32547572, 0.3729797, 0.41550775, 0.4525233, 0.48422688],
    [-9.8859684e-16, 0.05336338, 0.10662563, 0.15960641, 0.21194725, 0.26299671, 0.31175642, 0.35704163, 0.39787893, 0.43384308, 0.46506299],
    [8.1482923e-16, 0.051189765, 0.10223461, 0.15291312, 0.20284205, 0.25139784, 0.29771235, 0.34083038, 0.37999689, 0.41487165, 0.44552836],
    [-5.2430725e-16, 0.048921203, 0.097656042, 0.14594899, 0.19340727, 0.23945453, 0.28335557, 0.32435166, 0.36185887, 0.39560249, 0.4256148],
    [-1.5102534e-15, 0.046550901, 0.092879867, 0.13870728, 0.18364609, 0.22718012, 0.26870063, 0.30761189, 0.3434627, 0.3760294, 0.40531427],
    [1.8850592e-15, 0.044075635, 0.087903258, 0.1311912, 0.17357157, 0.21459456, 0.25376509, 0.29061916, 0.32480772, 0.35614727, 0.38461923],
    [7.9717947e-16, 0.041497157, 0.082732595, 0.12341543, 0.16320713, 0.20172448, 0.23857018, 0.2733842, 0.30589567, 0.33595286, 0.3635235],
    [-6.4270096e-16, 0.038823125, 0.077384656, 0.11540664, 0.15258654, 0.18860371, 0.22314189, 0.25592186, 0.28673204, 0.31544611, 0.34202346],
    [-7.1873903e-16, 0.036067405, 0.071886732, 0.10720318, 0.14175365, 0.17527365, 0.20751246, 0.23825274, 0.26732785, 0.29463171, 0.32011941],
    [7.3605869e-16, 0.033249433, 0.06627539, 0.098853742, 0.13076169, 0.16178379, 0.19172168, 0.22040514, 0.24770157, 0.27352129, 0.29781783],
    [6.2751782e-17, 0.03039274, 0.060594091, 0.090414961, 0.11967187, 0.14819179, 0.17581814, 0.2024169, 0.2278816, 0.25213594, 0.27513406],
    [-3.8478431e-16, 0.027522908, 0.054889912, 0.081948178, 0.10855126, 0.13456272, 0.15985985, 0.18433707, 0.20790849, 0.23050925, 0.2520956],
    [-7.2018065e-16, 0.02466537, 0.049209965, 0.073515691, 0.09746978, 0.12096736, 0.1439138, 0.16622661, 0.1878369, 0.20869007, 0.22874585],
    [-2.0030815e-16, 0.021843478, 0.043598096, 0.065176888, 0.086496594, 0.10747934, 0.1280541, 0.14815783, 0.16773636, 0.18674479, 0.20514763],
    [6.8023755e-17, 0.019077098, 0.038092309, 0.056984886, 0.075696311, 0.094171299, 0.11235866, 0.13021201, 0.14769027, 0.164758, 0.18138556],
    [2.7693107e-16, 0.016381863, 0.032723182, 0.048984009, 0.065125568, 0.081110786, 0.096904764, 0.11247518, 0.12779258, 0.14283063, 0.15756626],
    [-7.0395891e-17, 0.013768988, 0.027513272, 0.041208418, 0.054830523, 0.068356464, 0.081764123, 0.095032585, 0.10814231, 0.12107525, 0.13381498],
    [-5.7210618e-16, 0.011245541, 0.022477356, 0.033681822, 0.044845519, 0.055955328, 0.066998523, 0.07796285, 0.088836608, 0.099608709, 0.11026874],
    [-1.4517119e-16, 0.0088149731, 0.017623234, 0.026418102, 0.035192959, 0.043941279, 0.052656657, 0.061332838, 0.069963743, 0.078543489, 0.087066417],
    [-6.6252552e-16, 0.0064777674, 0.012952839, 0.019422525, 0.025884152, 0.032335062, 0.038772629, 0.045194258, 0.051597392, 0.057979521, 0.064338187],
    [-3.7299862e-16, 0.0042320973, 0.0084634352, 0.012693255, 0.016920801, 0.021145317, 0.025366053, 0.029582261, 0.0337932, 0.037998133, 0.042196329],
    [-1.5108905e-16, 0.0020744234, 0.0041487566, 0.0062229094, 0.0082967916, 0.010370313, 0.012443384, 0.014515915, 0.016587815, 0.018658996, 0.020729367],
    [-7.6450069e-17, -7.6450069e-17, -7.6450069e-17, -7.6450069e-17, -7.6450069e-17, -7.6450069e-17, -7.6450069e-17, -7.6450069e-17, -7.6450069e-17, -7.6450069e-17, -7.6450069e-17],
]

Q_IQR = [
    [1.9947094, 2.0069759, 2.0436572, 2.1038793, 2.1852114, 2.2836222, 2.3946993, 2.5147667, 2.641164, 2.7720652, 2.9062266],
    [1.9898773, 2.0014349, 2.0359456, 2.0924813, 2.1687264, 2.2610171, 2.3653605, 2.4783672, 2.5975309, 2.7210926, 2.8478376],
    [1.9854592, 1.9963415, 2.0287871, 2.0818372, 2.1532998, 2.2398474, 2.3378639, 2.4442303, 2.5565877, 2.6732457, 2.7930238],
    [1.9814142, 1.9916532, 2.0221274, 2.0718745, 2.1388333, 2.2199809, 2.3120451, 2.4121553, 2.5180953, 2.6282519, 2.7414688],
    [1.9777046, 1.9873249, 2.0159202, 2.0625376, 2.1252505, 2.2013153, 2.2877704, 2.3819767, 2.481858, 2.5858715, 2.6929005],
    [1.9742957, 1.9833227, 2.0101293, 2.0537791, 2.1124844, 2.1837592, 2.2649216, 2.3535491, 2.4477008, 2.5459062, 2.6470848],
    [1.9711559, 1.9796148, 2.004717, 2.0455525, 2.1004754, 2.1672329, 2.2433955, 2.3267467, 2.4154725, 2.508175, 2.6038158],
    [1.9682562, 1.9761721, 1.9996501, 2.0378228, 2.089171, 2.1516637, 2.2231016, 2.3014553, 2.3850362, 2.4725218, 2.5629067],
    [1.9655703, 1.9729679, 1.9949005, 2.0305503, 2.0785226, 2.1369872, 2.2039555, 2.2775727, 2.3562712, 2.4387992, 2.5241957],
    [1.9630744, 1.9699778, 1.9904415, 2.0237024, 2.068487, 2.1231431, 2.185882, 2.2550061, 2.3290649, 2.4068775, 2.4875287],
    [1.9607467, 1.9671804, 1.9862493, 2.0172482, 2.0590212, 2.1100789, 2.1688098, 2.233671, 2.3033188, 2.3766449, 2.4527739],
    [1.9585679, 1.9645552, 1.9823017, 2.0111611, 2.0500874, 2.0977438, 2.152678, 2.2134895, 2.2789386, 2.3479889, 2.4198076],
    [1.9565203, 1.9620843, 1.9785785, 2.0054145, 2.0416511, 2.0860906, 2.1374273, 2.1943915, 2.2558435, 2.3208151, 2.3885196],
    [1.9545883, 1.9597516, 1.9750613, 1.9999855, 2.0336807, 2.075077, 2.1230047, 2.1763122, 2.2339552, 2.295035, 2.3588069],
    [1.9527579, 1.9575421, 1.9717325, 1.9948516, 2.0261465, 2.0646646, 2.1093585, 2.1591905, 2.2132035, 2.2705657, 2.3305797],
    [1.9510163, 1.9554428, 1.9685768, 1.9899924, 2.0190207, 2.0548162, 2.0964448, 2.1429715, 2.1935249, 2.2473357, 2.3037496],
    [1.9493526, 1.9534417, 1.9655796, 1.985389, 2.012278, 2.0454985, 2.0842199, 2.1276037, 2.1748578, 2.2252743, 2.2782427],
    [1.9477568, 1.9515281, 1.9627281, 1.9810238, 2.0058945, 2.0366804, 2.0726457, 2.1130397, 2.1571473, 2.2043184, 2.2539862],
    [1.9462201, 1.9496926, 1.9600098, 1.9768803, 1.9998477, 2.0283329, 2.0616855, 2.099237, 2.1403427, 2.1844097, 2.2309142],
    [1.9447348, 1.9479263, 1.9574138, 1.9729435, 1.9941171, 2.0204282, 2.0513052, 2.0861543, 2.1243971, 2.1654954, 2.2089669],
    [1.943294, 1.9462219, 1.9549303, 1.969199, 1.9886832, 2.0129415, 2.0414734, 2.0737541, 2.1092671, 2.1475259, 2.1880897],
    [1.9418917, 1.9445724, 1.9525498, 1.9656343, 1.9835281, 2.0058491, 2.0321607, 2.0620014, 2.0949124, 2.130456, 2.1682309],
    [1.9405227, 1.9429719, 1.950264, 1.9622369, 1.9786349, 1.9991286, 2.0233395, 2.0508636, 2.0812953, 2.1142435, 2.1493444],
    [1.9391822, 1.9414148, 1.9480653, 1.9589957, 1.973988, 1.9927597, 2.0149843, 2.0403104, 2.0683811, 2.0988492, 2.1313876],
    [1.9378664, 1.9398964, 1.9459466, 1.9559004, 1.9695727, 1.9867231, 2.0070711, 2.0303132, 2.0561375, 2.0842372, 2.1143202],
    [1.9365715, 1.9384124, 1.9439017, 1.9529414, 1.9653755, 1.9810006, 1.9995776, 2.0208455, 2.044534, 2.0703741, 2.0981063],
    [1.9352947, 1.9369592, 1.9419248, 1.9501099, 1.9613838, 1.9755755, 1.9924828, 2.0118828, 2.0335429, 2.0572286, 2.0827121],
    [1.9340332, 1.9355334, 1.9400107, 1.9473976, 1.9575857, 1.9704322, 1.9857671, 2.0034019, 2.0231377, 2.0447722, 2.0681065],
    [1.9327848, 1.934132, 1.9381546, 1.9447972, 1.9539704, 1.965556, 1.9794123, 1.9953813, 2.0132943, 2.0329782, 2.0542611],
    [1.9315475, 1.9327525, 1.9363523, 1.9423017, 1.9505277, 1.9609332, 1.9734015, 1.9878009, 2.0039898, 2.0218219, 2.0411498],
    [1.9303195, 1.9313927, 1.9345999, 1.9399047, 1.9472481, 1.9565512, 1.9677186, 1.9806417, 1.9952033, 2.0112804, 2.0287483],
    [1.9290995, 1.9300505, 1.9328939, 1.9376005, 1.9441231, 1.9523982, 1.9623488, 1.9738865, 1.986915, 2.0013324, 2.0170346],
    [1.9278861, 1.9287243, 1.9312311, 1.9353836, 1.9411444, 1.9484632, 1.9572784, 1.9675188, 1.9791066, 1.9919584, 2.0059882],
    [1.9266785, 1.9274126, 1.9296088, 1.9332493, 1.9383048, 1.9447361, 1.9524944, 1.9615236, 1.9717612, 1.9831403, 1.9955907],
    [1.9254757, 1.926114, 1.9280243, 1.9311929, 1.9355975, 1.9412074, 1.9479852, 1.9558868, 1.9648632, 1.9748613, 1.9858252],
    [1.924277, 1.9248275, 1.9264755, 1.9292106, 1.933016, 1.9378686, 1.9437395, 1.9505953, 1.9583979, 1.9671061, 1.9766761],
    [1.9230818, 1.923552, 1.9249602, 1.9272987, 1.9305548, 1.9347116, 1.9397475, 1.9456372, 1.9523521, 1.9598607, 1.9681295],
    [1.9218896, 1.9222868, 1.9234767, 1.9254537, 1.9282087, 1.9317292, 1.9359996, 1.9410014, 1.9467134, 1.9531122, 1.9601727],
    [1.9207001, 1.9210312, 1.9220234, 1.9236727, 1.9259728, 1.9289148, 1.9324875, 1.9366779, 1.9414706, 1.946849, 1.9527945],
    [1.9195129, 1.9197846, 1.9205989, 1.9219531, 1.9238429, 1.9262623, 1.9292035, 1.9326574, 1.9366137, 1.9410604, 1.9459847],
    [1.9183278, 1.9185465, 1.919202, 1.9202926, 1.9218153, 1.9237663, 1.9261405, 1.9289319, 1.9321334, 1.9357371, 1.9397345],
    [1.9171446, 1.9173165, 1.9178316, 1.9186889, 1.9198866, 1.9214222, 1.9232925, 1.9254938, 1.9280216, 1.9308709, 1.9340361],
    [1.9159634, 1.9160943, 1.9164868, 1.9171403, 1.9180537, 1.9192255, 1.920654, 1.9223367, 1.9242712, 1.9264543, 1.9288828],
    [1.9147839, 1.9148796, 1.9151669, 1.9156453, 1.9163142, 1.9171728, 1.9182202, 1.9194551, 1.920876, 1.9224814, 1.9242693],
    [1.9136061, 1.9136724, 1.9138713, 1.9142025, 1.9146658, 1.9152609, 1.9159871, 1.916844, 1.9178309, 1.9189468, 1.9201909],
    [1.9124301, 1.9124725, 1.9125994, 1.912811, 1.913107, 1.9134872, 1.9139516, 1.9144998, 1.9151316, 1.9158465, 1.9166443],
    [1.911256, 1.9112798, 1.9113511, 1.9114699, 1.9116362, 1.9118499, 1.912111, 1.9124194, 1.912775, 1.9131776, 1.9136272],
    [1.9100837, 1.9100943, 1.9101259, 1.9101787, 1.9102526, 1.9103476, 1.9104636, 1.9106007, 1.9107589, 1.9109381, 1.9111383],
    [1.9089134, 1.908916, 1.9089239, 1.9089371, 1.9089556, 1.9089794, 1.9090084, 1.9090427, 1.9090823, 1.9091272, 1.9091773],
    [1.9077451, 1.9077451, 1.9077451, 1.9077451, 1.9077451, 1.9077451, 1.9077451, 1.9077451, 1.9077451, 1.9077451, 1.9077451],
]

Q_MEDIAN = [
    [0, -3.1448844, -6.2876044, -9.4265439, -12.560754, -15.68981, -18.813617, -21.932261, -25.045919, -28.154812, -31.25917],
    [0, -1.5523155, -3.1026743, -4.649579, -6.1921179, -7.7298583, -9.262679, -10.790639, -12.313889, -13.832628, -15.34707],
    [0, -1.0208287, -2.039888, -3.0557941, -4.0676761, -5.0750961, -6.0779118, -7.0761545, -8.0699536, -9.0594846, -10.044943],
    [0, -0.75464829, -1.5076963, -2.2578686, -3.0043358, -3.7466605, -4.4846807, -5.2184049, -5.9479388, -6.6734366, -7.395077],
    [0, -0.59461693, -1.1877866, -1.7783356, -2.3654779, -2.9487799, -3.5280632, -4.1033155, -4.6746188, -5.2421099, -5.8059482],
    [0, -0.48767985, -0.97405145, -1.458037, -1.9388942, -2.4161962, -2.8897525, -3.3595296, -3.8255913, -4.2880535, -4.7470593],
    [-1.7763568e-15, -0.4110982, -0.82101401, -1.2287597, -1.6336367, -2.0352269, -2.4333308, -2.8278978, -3.2189717, -3.6066506, -3.9910621],
    [-1.7763568e-15, -0.35350082, -0.70593367, -1.0563945, -1.4042284, -1.7490293, -2.0905898, -2.4288449, -2.7638204, -3.0955973, -3.4242883],
    [0, -0.30856975, -0.61617552, -0.92199122, -1.2254047, -1.5260233, -1.8236359, -2.1181642, -2.4096177, -2.6980613, -2.9835919],
    [-1.7763568e-15, -0.27251318, -0.54415672, -0.81417729, -1.0820041, -1.3472604, -1.6097325, -1.8693315, -2.1260524, -2.379944, -2.6310903],
    [0, -0.24291732, -0.48505093, -0.72571452, -0.96437836, -1.2006816, -1.4344113, -1.665469, -1.8938367, -2.1195501, -2.3426782],
    [0, -0.21817242, -0.43563928, -0.65177634, -0.86609313, -1.0782466, -1.2880254, -1.4953245, -1.7001136, -1.9024165, -2.1022889],
    [0, -0.19716361, -0.39369253, -0.58902042, -0.78269406, -0.97438875, -1.1638972, -1.3511083, -1.5359828, -1.7185316, -1.898799],
    [0, -0.17909398, -0.35761774, -0.53505815, -0.7109982, -0.88513141, -1.0572558, -1.2272568, -1.3950868, -1.5607455, -1.7242665],
    [0, -0.16337877, -0.3262459, -0.48813739, -0.64867043, -0.80755762, -0.96460302, -1.11969, -1.2727642, -1.4238158, -1.5728684],
    [0, -0.149579, -0.29869959, -0.44694316, -0.59395911, -0.73947898, -0.88331432, -1.0253482, -1.1655195, -1.3038116, -1.4402377],
    [0, -0.13735876, -0.27430747, -0.41046912, -0.54552395, -0.67922173, -0.81138299, -0.94189084, -1.0706805, -1.1977271, -1.3230364],
    [0, -0.12645646, -0.25254679, -0.37793221, -0.50232181, -0.62548391, -0.74724775, -0.86749835, -0.98616758, -1.1032253, -1.2186691],
    [0, -0.11666534, -0.23300445, -0.34871355, -0.46352885, -0.57723661, -0.68967558, -0.80073357, -0.91034075, -1.0184616, -1.1250874],
    [-1.7763568e-15, -0.10781983, -0.21534957, -0.32231757, -0.42848539, -0.5336567, -0.63768011, -0.74044709, -0.84188693, -0.94196026, -1.0406525],
    [0, -0.099785619, -0.19931389, -0.29834257, -0.39665694, -0.4940773, -0.5904624, -0.68570813, -0.77974383, -0.87252723, -0.9640392],
    [0, -0.092452695, -0.18467772, -0.27645964, -0.36760567, -0.4579523, -0.54736841, -0.63575499, -0.72304214, -0.80918567, -0.89416253],
    [0, -0.085730005, -0.17125914, -0.25639648, -0.34096961, -0.42483042, -0.5078578, -0.58995819, -0.67106369, -0.7511287, -0.83012701],
    [-1.7763568e-15, -0.079541519, -0.15890638, -0.23792595, -0.31644666, -0.39433492, -0.47147966, -0.54779325, -0.62320988, -0.69768389, -0.77118682],
    [0, -0.07382324, -0.14749165, -0.22085687, -0.29378267, -0.36614918, -0.43785516, -0.50881905, -0.57897799, -0.64828677, -0.71671512],
    [0, -0.068520885, -0.13690659, -0.20502713, -0.27276222, -0.34000487, -0.40666334, -0.47266234, -0.53794242, -0.60245932, -0.66618197],
    [-1.7763568e-15, -0.063588099, -0.12705868, -0.19029837, -0.25320148, -0.31567304, -0.3776305, -0.43900487, -0.49974046, -0.55979455, -0.61913588],
    [0, -0.058985028, -0.11786839, -0.17655164, -0.23494249, -0.29295707, -0.35052169, -0.40757357, -0.46406107, -0.51994347, -0.5751899],
    [0, -0.05467723, -0.10926695, -0.1636842, -0.21784877, -0.2716872, -0.32513405, -0.37813273, -0.43063589, -0.48260511, -0.53401043],
    [-1.7763568e-15, -0.05063473, -0.1011946, -0.15160666, -0.20180175, -0.25171587, -0.30129141, -0.35047787, -0.39923213, -0.44751845, -0.49530831],
    [1.7763568e-15, -0.046831341, -0.093599044, -0.14024096, -0.18669776, -0.23291423, -0.27884005, -0.32443047, -0.36964677, -0.41445613, -0.45883163],
    [0, -0.043244049, -0.086434395, -0.12951847, -0.17244586, -0.21516921, -0.25764502, -0.29983412, -0.34170198, -0.38321886, -0.42435984],
    [-1.7763568e-15, -0.039852531, -0.079660124, -0.11937868, -0.15896573, -0.19838108, -0.23758745, -0.2765509, -0.31524108, -0.35363141, -0.39169908],
    [0, -0.036638772, -0.073240296, -0.10976793, -0.14618624, -0.18246147, -0.21856205, -0.25445888, -0.29012562, -0.32553884, -0.36067806],
    [0, -0.033586722, -0.0671429, -0.10063843, -0.13404405, -0.16733177, -0.20047516, -0.23344961, -0.26623259, -0.29880373, -0.33114495],
    [1.7763568e-15, -0.030682027, -0.061339314, -0.091947431, -0.12248255, -0.15292173, -0.18324316, -0.21342634, -0.24345229, -0.27330361, -0.30296458],
    [-1.7763568e-15, -0.027911791, -0.05580383, -0.083656575, -0.11145091, -0.13916831, -0.16679107, -0.19430238, -0.22168653, -0.24892892, -0.2760162],
    [0, -0.025264386, -0.050513264, -0.075731268, -0.10090331, -0.12601472, -0.15105137, -0.17599973, -0.20084704, -0.22558133, -0.25019148],
    [-1.7763568e-15, -0.022729283, -0.045446629, -0.068140197, -0.090798324, -0.11340962, -0.13596303, -0.15844795, -0.18085422, -0.20317224, -0.225393],
    [0, -0.020296909, -0.040584848, -0.060854906, -0.081098282, -0.10130635, -0.12147069, -0.14158317, -0.16163594, -0.18162152, -0.20153277],
    [0, -0.017958529, -0.035910512, -0.053849433, -0.07176885, -0.089662416, -0.10752392, -0.1253473, -0.14312669, -0.16085644, -0.17853111],
    [0, -0.015706138, -0.031407668, -0.047099999, -0.062778579, -0.078438912, -0.094076576, -0.10968724, -0.12526668, -0.14081078, -0.15631558],
    [0, -0.01353237, -0.027061641, -0.040584727, -0.054098557, -0.067600093, -0.081086334, -0.094554324, -0.10800117, -0.12142403, -0.13482014],
    [0, -0.011430416, -0.022858873, -0.034283414, -0.045702095, -0.057112983, -0.068514164, -0.079903745, -0.091279861, -0.10264068, -0.11398439],
    [0, -0.0093939601, -0.01878678, -0.02817732, -0.037564447, -0.04694703, -0.056323949, -0.06569409, -0.075056351, -0.084409642, -0.09375289],
    [1.7763568e-15, -0.0074171109, -0.014833634, -0.022248982, -0.029662569, -0.037073811, -0.044482126, -0.051886935, -0.059287664, -0.066683742, -0.074074603],
    [0, -0.0054943506, -0.010988451, -0.016482052, -0.021974904, -0.027466757, -0.032957364, -0.038446476, -0.043933846, -0.04941923, -0.054902382],
    [0, -0.003620484, -0.0072408932, -0.010861153, -0.014481189, -0.018100926, -0.021720289, -0.025339205, -0.028957599, -0.032575397, -0.036192525],
    [0, -0.0017905938, -0.0035811781, -0.0053717436, -0.0071622807, -0.0089527801, -0.010743232, -0.012533628, -0.014323958, -0.016114212, -0.017904381],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
]

