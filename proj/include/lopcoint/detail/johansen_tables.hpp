#pragma once

// Generated by tools/gen_johansen_tables (reps=120000, steps=1000, seed=20240601). Do not edit.

namespace lopcoint::detail {

inline constexpr int kJohansenMaxDim = 12;
inline constexpr int kJohansenQuantiles = 44;

inline constexpr double kJohansenTail[kJohansenQuantiles] = {0.9999, 0.999, 0.995, 0.99, 0.98, 0.95, 0.9, 0.85, 0.8, 0.75, 0.7, 0.65, 0.6, 0.55, 0.5, 0.45, 0.4, 0.35, 0.3, 0.25, 0.2, 0.175, 0.15, 0.125, 0.1, 0.09, 0.08, 0.07, 0.06, 0.05, 0.045, 0.04, 0.035, 0.03, 0.025, 0.02, 0.015, 0.01, 0.0075, 0.005, 0.0025, 0.001, 0.0005, 0.0001};

// [case-1][dim-1][0 = trace, 1 = max-eigenvalue][quantile]
inline constexpr double kJohansenQuantileTable[5][kJohansenMaxDim][2][kJohansenQuantiles] = {
  {
    {  // case 1, dim 1
      {0.000000, 0.000003, 0.000064, 0.000243, 0.000952, 0.006144, 0.024190, 0.054267, 0.095845, 0.150018, 0.216810, 0.294208, 0.383001, 0.483391, 0.602250, 0.735028, 0.893330, 1.071452, 1.290114, 1.553565, 1.880100, 2.085062, 2.319711, 2.615547, 2.971391, 3.143752, 3.331747, 3.546266, 3.790354, 4.105799, 4.284332, 4.488386, 4.691504, 4.954159, 5.279885, 5.671501, 6.151819, 6.908615, 7.393283, 8.148641, 9.309817, 10.983580, 12.286179, 15.790649},
      {0.000000, 0.000003, 0.000064, 0.000243, 0.000952, 0.006144, 0.024190, 0.054267, 0.095845, 0.150018, 0.216810, 0.294208, 0.383001, 0.483391, 0.602250, 0.735028, 0.893330, 1.071452, 1.290114, 1.553565, 1.880100, 2.085062, 2.319711, 2.615547, 2.971391, 3.143752, 3.331747, 3.546266, 3.790354, 4.105799, 4.284332, 4.488386, 4.691504, 4.954159, 5.279885, 5.671501, 6.151819, 6.908615, 7.393283, 8.148641, 9.309817, 10.983580, 12.286179, 15.790649},
    },
    {  // case 1, dim 2
      {0.451443, 0.706507, 1.039070, 1.232537, 1.501116, 1.998366, 2.545440, 2.984384, 3.360455, 3.718454, 4.067361, 4.407576, 4.752045, 5.115696, 5.486762, 5.880263, 6.282082, 6.734044, 7.246883, 7.822254, 8.507512, 8.900358, 9.328340, 9.844788, 10.451669, 10.736852, 11.058837, 11.427513, 11.830368, 12.309384, 12.578755, 12.887350, 13.247849, 13.636781, 14.065207, 14.617664, 15.258445, 16.186693, 16.804986, 17.778680, 19.359551, 21.672200, 23.027854, 25.703420},
      {0.420666, 0.609344, 0.898898, 1.068069, 1.292631, 1.716907, 2.199699, 2.581975, 2.921862, 3.238913, 3.545269, 3.854841, 4.166219, 4.487782, 4.823578, 5.181189, 5.569883, 5.979211, 6.439910, 6.984626, 7.613336, 7.984364, 8.397769, 8.886953, 9.455776, 9.733028, 10.034634, 10.370367, 10.752132, 11.230432, 11.492349, 11.778989, 12.098888, 12.461738, 12.898449, 13.408744, 14.053703, 14.977873, 15.561663, 16.455411, 18.004481, 19.940622, 21.594579, 24.247152},
    },
    {  // case 1, dim 3
      {3.474548, 4.546075, 5.591772, 6.140646, 6.831406, 7.966076, 9.140939, 9.986483, 10.721455, 11.388409, 11.998637, 12.598416, 13.187768, 13.788512, 14.390288, 15.017616, 15.671700, 16.365567, 17.127658, 17.986458, 18.979183, 19.528405, 20.163858, 20.876302, 21.739757, 22.157773, 22.593753, 23.088922, 23.629433, 24.235944, 24.594752, 25.016932, 25.454396, 25.962546, 26.555741, 27.291151, 28.182041, 29.427220, 30.355175, 31.594860, 33.644294, 36.083927, 37.944226, 43.266125},
      {2.128154, 2.741224, 3.441360, 3.836575, 4.299939, 5.109178, 5.930705, 6.546814, 7.079378, 7.564347, 8.031295, 8.484140, 8.925114, 9.374058, 9.832377, 10.318742, 10.826355, 11.356635, 11.943055, 12.613724, 13.410842, 13.864329, 14.387584, 14.973498, 15.693159, 16.021180, 16.392866, 16.806627, 17.275969, 17.801706, 18.099632, 18.437758, 18.780981, 19.217881, 19.728244, 20.344866, 21.140091, 22.109700, 22.860413, 23.904587, 25.714456, 28.234703, 29.874011, 33.800528},
    },
    {  // case 1, dim 4
      {10.475846, 12.307332, 14.121473, 15.078678, 16.167863, 18.041179, 19.800459, 21.066535, 22.150848, 23.108983, 23.984429, 24.833839, 25.666651, 26.479135, 27.308194, 28.153551, 29.024993, 29.938126, 30.954547, 32.053531, 33.337770, 34.054011, 34.846581, 35.747545, 36.831954, 37.324199, 37.893086, 38.510785, 39.203959, 39.988005, 40.449320, 40.970567, 41.474163, 42.070953, 42.775480, 43.670775, 44.764032, 46.288109, 47.321801, 48.610473, 51.040070, 54.451680, 56.731076, 61.101203},
      {4.900669, 5.939343, 6.937903, 7.464852, 8.089187, 9.172949, 10.258188, 11.027760, 11.698233, 12.301548, 12.865609, 13.416722, 13.952947, 14.498031, 15.048614, 15.610952, 16.211156, 16.836681, 17.527971, 18.317318, 19.202842, 19.727759, 20.289315, 20.956508, 21.738894, 22.103814, 22.500237, 22.970867, 23.489139, 24.076028, 24.400362, 24.749213, 25.152980, 25.658307, 26.216079, 26.918565, 27.758556, 28.898680, 29.717237, 30.857422, 32.864620, 35.249624, 37.211234, 41.782981},
    },
    {  // case 1, dim 5
      {20.825875, 23.717297, 26.307888, 27.746667, 29.407411, 32.031447, 34.453024, 36.159133, 37.579417, 38.823725, 39.989446, 41.060964, 42.098966, 43.126897, 44.147658, 45.204792, 46.323850, 47.480712, 48.704328, 50.097741, 51.672096, 52.568515, 53.528112, 54.628245, 55.927289, 56.535795, 57.230291, 57.941674, 58.794555, 59.743602, 60.282598, 60.895680, 61.583657, 62.353737, 63.171855, 64.240148, 65.485520, 67.392329, 68.759533, 70.578042, 73.481134, 76.673241, 79.285454, 84.227245},
      {8.191106, 9.446773, 10.741374, 11.413018, 12.237246, 13.559518, 14.852750, 15.767222, 16.542198, 17.245886, 17.899808, 18.524266, 19.134195, 19.742817, 20.356942, 20.998044, 21.669873, 22.366678, 23.117980, 23.973150, 24.961081, 25.520462, 26.145299, 26.852812, 27.711428, 28.107311, 28.564436, 29.063945, 29.599432, 30.233389, 30.579108, 30.994318, 31.432687, 31.972801, 32.562901, 33.329377, 34.244962, 35.579993, 36.426542, 37.717594, 39.994961, 42.827973, 44.589554, 49.304813},
    },
    {  // case 1, dim 6
      {36.032856, 39.328239, 42.795691, 44.670261, 46.657336, 49.892895, 53.034233, 55.155073, 56.917614, 58.447649, 59.855382, 61.192974, 62.465148, 63.759307, 65.031875, 66.270719, 67.615187, 68.984512, 70.452689, 72.085212, 73.978756, 75.040632, 76.184114, 77.525884, 79.022673, 79.699643, 80.451464, 81.283685, 82.266138, 83.398605, 84.037806, 84.683581, 85.464420, 86.273467, 87.304414, 88.528318, 90.002962, 91.982854, 93.436384, 95.329256, 98.590802, 102.912933, 105.669158, 112.032085},
      {11.978799, 13.479874, 14.995739, 15.809135, 16.702166, 18.159646, 19.589736, 20.629182, 21.506438, 22.300194, 23.031346, 23.716911, 24.378172, 25.043016, 25.714922, 26.408478, 27.127708, 27.904320, 28.732339, 29.667118, 30.722620, 31.332464, 32.029907, 32.797553, 33.708861, 34.143375, 34.625469, 35.137117, 35.721510, 36.373871, 36.774368, 37.218732, 37.705442, 38.229665, 38.863574, 39.646657, 40.611255, 41.960535, 42.964990, 44.205279, 46.345215, 49.426349, 51.262286, 54.115197},
    },
    {  // case 1, dim 7
      {53.636643, 58.808237, 63.213707, 65.240359, 67.884238, 71.857354, 75.436864, 77.958952, 80.051639, 81.873667, 83.548591, 85.118743, 86.612282, 88.129325, 89.602302, 91.115882, 92.673115, 94.304621, 96.057056, 97.959338, 100.107596, 101.336958, 102.652708, 104.171011, 105.915200, 106.712191, 107.581650, 108.626852, 109.752672, 110.920535, 111.622548, 112.345674, 113.254325, 114.267837, 115.322763, 116.761820, 118.467558, 120.767300, 122.403840, 124.545535, 128.273026, 132.434792, 135.725872, 143.775954},
      {15.882915, 17.645500, 19.314489, 20.189289, 21.221539, 22.862560, 24.450761, 25.573901, 26.520670, 27.360247, 28.137226, 28.866331, 29.587637, 30.290737, 31.015099, 31.770060, 32.552794, 33.372605, 34.260657, 35.247341, 36.413990, 37.065266, 37.784961, 38.661075, 39.629067, 40.088899, 40.595895, 41.136015, 41.756361, 42.454267, 42.842025, 43.290865, 43.782547, 44.366608, 45.055444, 45.871817, 46.839632, 48.288822, 49.222142, 50.648482, 52.914020, 55.783453, 57.623139, 62.071010},
    },
    {  // case 1, dim 8
      {76.051753, 82.144741, 87.425911, 90.158980, 92.968272, 97.647092, 101.980504, 104.965146, 107.371776, 109.481780, 111.427114, 113.180669, 114.925900, 116.677145, 118.366629, 120.057347, 121.814716, 123.676957, 125.597497, 127.762382, 130.195533, 131.569346, 133.091655, 134.819786, 136.766685, 137.702213, 138.686745, 139.757411, 141.000564, 142.356641, 143.104715, 143.986008, 144.968614, 146.090364, 147.308055, 148.843572, 150.739613, 153.370046, 155.026537, 157.480757, 161.086877, 166.286088, 169.713557, 177.097936},
      {20.149183, 22.063634, 23.863619, 24.836792, 25.956101, 27.739559, 29.458350, 30.694728, 31.690676, 32.574610, 33.417035, 34.197938, 34.967451, 35.724462, 36.483083, 37.259040, 38.085579, 38.960459, 39.894601, 40.927314, 42.127929, 42.828432, 43.589945, 44.475722, 45.478233, 45.945231, 46.480935, 47.069384, 47.717935, 48.472159, 48.873409, 49.337713, 49.873396, 50.456554, 51.154160, 52.031524, 53.121956, 54.657239, 55.720682, 57.063195, 59.319162, 62.330291, 63.669471, 68.679811},
    },
    {  // case 1, dim 9
      {102.568421, 109.584773, 115.321877, 118.559221, 122.199712, 127.495346, 132.336916, 135.685804, 138.417640, 140.814098, 143.062301, 145.132763, 147.078816, 148.993500, 150.905283, 152.807492, 154.764400, 156.862778, 159.052070, 161.476764, 164.185809, 165.663580, 167.365754, 169.302918, 171.516673, 172.474994, 173.621557, 174.791666, 176.201712, 177.824418, 178.646999, 179.571660, 180.628386, 181.909653, 183.382334, 184.912924, 187.051033, 190.036367, 192.083545, 194.670770, 199.345812, 204.484514, 207.444513, 215.532334},
      {24.208694, 26.428910, 28.497726, 29.525650, 30.756076, 32.655648, 34.430320, 35.723610, 36.804819, 37.742521, 38.615124, 39.469524, 40.279712, 41.101803, 41.926734, 42.753506, 43.610092, 44.503038, 45.511334, 46.615111, 47.860374, 48.560649, 49.358318, 50.280141, 51.366528, 51.842890, 52.361444, 52.959053, 53.636183, 54.408471, 54.858238, 55.383267, 55.943142, 56.531008, 57.250838, 58.097996, 59.261961, 60.777021, 61.860513, 63.324593, 65.634934, 68.511387, 70.953103, 76.113826},
    },
    {  // case 1, dim 10
      {131.913905, 140.088894, 147.201418, 150.783152, 154.978259, 161.103904, 166.647224, 170.484817, 173.570319, 176.232024, 178.634614, 180.919957, 183.115647, 185.257313, 187.404676, 189.566366, 191.745505, 194.060786, 196.522702, 199.201439, 202.213456, 203.932823, 205.890065, 207.982672, 210.371308, 211.443177, 212.597492, 213.995970, 215.497870, 217.248532, 218.201922, 219.290815, 220.501510, 221.886096, 223.420324, 225.209396, 227.597448, 230.682559, 232.660464, 235.343516, 240.084175, 245.908537, 249.933498, 259.122063},
      {29.004714, 31.004233, 33.179714, 34.248338, 35.584488, 37.605859, 39.560857, 40.916540, 42.038190, 43.032559, 43.961137, 44.835417, 45.681420, 46.533165, 47.374670, 48.240364, 49.149871, 50.093948, 51.128758, 52.245463, 53.586902, 54.344498, 55.150750, 56.081322, 57.190565, 57.708105, 58.256149, 58.906858, 59.580738, 60.386777, 60.879339, 61.383240, 61.924991, 62.525677, 63.261089, 64.190266, 65.301363, 66.767989, 67.837082, 69.337357, 71.754713, 74.747822, 76.911640, 82.736834},
    },
    {  // case 1, dim 11
      {167.939974, 175.361524, 183.290286, 187.359248, 191.832270, 198.584871, 204.899734, 209.104118, 212.506795, 215.513347, 218.231124, 220.740425, 223.160982, 225.470143, 227.840521, 230.203900, 232.611603, 235.136217, 237.867664, 240.803904, 244.100573, 245.983015, 248.024364, 250.274446, 253.007194, 254.139169, 255.478974, 256.939193, 258.547715, 260.397069, 261.449802, 262.543119, 263.849175, 265.383328, 267.039998, 268.906700, 271.500221, 274.764587, 277.250232, 280.370563, 285.773458, 292.044472, 296.750947, 307.167499},
      {33.243219, 35.570998, 37.898700, 39.142331, 40.514365, 42.622873, 44.658108, 46.111355, 47.288753, 48.344305, 49.306548, 50.227413, 51.117595, 52.002561, 52.873107, 53.783301, 54.734980, 55.722459, 56.799577, 58.005903, 59.349201, 60.104624, 60.951360, 61.934398, 63.063767, 63.585018, 64.173204, 64.827400, 65.557687, 66.375386, 66.861456, 67.398313, 67.974980, 68.645077, 69.434613, 70.342598, 71.509236, 73.161827, 74.330982, 75.924391, 78.526176, 81.627718, 83.919424, 89.812781},
    },
    {  // case 1, dim 12
      {205.074525, 214.604589, 223.752138, 227.912196, 232.702647, 240.079987, 246.844938, 251.654890, 255.385284, 258.509216, 261.453355, 264.255282, 266.918890, 269.503228, 272.071887, 274.615578, 277.282150, 280.021963, 282.925957, 286.048614, 289.701910, 291.747982, 294.000344, 296.542109, 299.409385, 300.748790, 302.150426, 303.732547, 305.541516, 307.506287, 308.644371, 309.846724, 311.212474, 312.750266, 314.553038, 316.779681, 319.611343, 323.282315, 325.761797, 329.179001, 334.574242, 341.625339, 346.088306, 356.537958},
      {37.685967, 40.565148, 42.703752, 43.923912, 45.388424, 47.635843, 49.792773, 51.280029, 52.510849, 53.592054, 54.601641, 55.547314, 56.453293, 57.372217, 58.285240, 59.212166, 60.166127, 61.187407, 62.295245, 63.508692, 64.891575, 65.700830, 66.603610, 67.603768, 68.807674, 69.361328, 69.933641, 70.544488, 71.314562, 72.204261, 72.676594, 73.228888, 73.861080, 74.559942, 75.332440, 76.326045, 77.563165, 79.141364, 80.297292, 82.009762, 84.362981, 87.624250, 89.590426, 94.916113},
    },
  },
  {
    {  // case 2, dim 1
      {0.235847, 0.339664, 0.491075, 0.590874, 0.736427, 1.013913, 1.346590, 1.630693, 1.886577, 2.135882, 2.381453, 2.629413, 2.886613, 3.154029, 3.437050, 3.743619, 4.061877, 4.425134, 4.846353, 5.306769, 5.873730, 6.204308, 6.572670, 7.013959, 7.542510, 7.779373, 8.054509, 8.365587, 8.714539, 9.134105, 9.359241, 9.617422, 9.931502, 10.251832, 10.643438, 11.158970, 11.792930, 12.670374, 13.329000, 14.139695, 15.559233, 17.557801, 18.843624, 23.506155},
      {0.235847, 0.339664, 0.491075, 0.590874, 0.736427, 1.013913, 1.346590, 1.630693, 1.886577, 2.135882, 2.381453, 2.629413, 2.886613, 3.154029, 3.437050, 3.743619, 4.061877, 4.425134, 4.846353, 5.306769, 5.873730, 6.204308, 6.572670, 7.013959, 7.542510, 7.779373, 8.054509, 8.365587, 8.714539, 9.134105, 9.359241, 9.617422, 9.931502, 10.251832, 10.643438, 11.158970, 11.792930, 12.670374, 13.329000, 14.139695, 15.559233, 17.557801, 18.843624, 23.506155},
    },
    {  // case 2, dim 2
      {2.527845, 3.235230, 4.022005, 4.480134, 5.029466, 5.960323, 6.931033, 7.640136, 8.251197, 8.820300, 9.350278, 9.865255, 10.371085, 10.881705, 11.416819, 11.956890, 12.534573, 13.141520, 13.809741, 14.566807, 15.447040, 15.940313, 16.521362, 17.180417, 17.938284, 18.306712, 18.717310, 19.175069, 19.649363, 20.227432, 20.560335, 20.934456, 21.385041, 21.861759, 22.460504, 23.096924, 23.959883, 25.141324, 25.946396, 27.136028, 29.043327, 31.390119, 33.178509, 37.457567},
      {1.520422, 2.110066, 2.699900, 3.028242, 3.424520, 4.131492, 4.848010, 5.395838, 5.863511, 6.303480, 6.719339, 7.141304, 7.556525, 7.960844, 8.379400, 8.823594, 9.291310, 9.796987, 10.345563, 10.975981, 11.710683, 12.138634, 12.638252, 13.194956, 13.873783, 14.183470, 14.530079, 14.914533, 15.363700, 15.883062, 16.165051, 16.494994, 16.850265, 17.262126, 17.766189, 18.372605, 19.106275, 20.258925, 21.082203, 22.078500, 23.815627, 25.792027, 27.390424, 29.740605},
    },
    {  // case 2, dim 3
      {8.291043, 10.027278, 11.607113, 12.426613, 13.400172, 14.981564, 16.564285, 17.714388, 18.688042, 19.517749, 20.296836, 21.062784, 21.804199, 22.535950, 23.272983, 24.028629, 24.823873, 25.679882, 26.592044, 27.626291, 28.820060, 29.488169, 30.237010, 31.103528, 32.102630, 32.568725, 33.073571, 33.616247, 34.226716, 34.952215, 35.387645, 35.839243, 36.378850, 36.972844, 37.641914, 38.459661, 39.527612, 40.922293, 41.860223, 43.169721, 45.273963, 48.378944, 50.458585, 55.209596},
      {4.077504, 4.997188, 5.953968, 6.458295, 7.023161, 8.017475, 9.017636, 9.745408, 10.371294, 10.938561, 11.465909, 11.991936, 12.496527, 12.999748, 13.509709, 14.046175, 14.609518, 15.207905, 15.873609, 16.604948, 17.474497, 17.957980, 18.513695, 19.152260, 19.931820, 20.279486, 20.678838, 21.111334, 21.620763, 22.193219, 22.501662, 22.870931, 23.267055, 23.717141, 24.261839, 24.889270, 25.717626, 26.849946, 27.627766, 28.753557, 30.584033, 33.196398, 34.806472, 38.477831},
    },
    {  // case 2, dim 4
      {17.864393, 20.405628, 22.978533, 24.279065, 25.700828, 28.034007, 30.236288, 31.814510, 33.100470, 34.245900, 35.307040, 36.306615, 37.287159, 38.257692, 39.215000, 40.225745, 41.243069, 42.317891, 43.483868, 44.778494, 46.225560, 47.058075, 47.985795, 49.039518, 50.266603, 50.843932, 51.448501, 52.107225, 52.863741, 53.744551, 54.275596, 54.805593, 55.448572, 56.153003, 56.989019, 57.976389, 59.257850, 60.934903, 62.092331, 63.653869, 66.360739, 70.087810, 72.124923, 77.782414},
      {7.374307, 8.472071, 9.698108, 10.362808, 11.125635, 12.358355, 13.557254, 14.422399, 15.158778, 15.823920, 16.452261, 17.050182, 17.638984, 18.221295, 18.811202, 19.425418, 20.059899, 20.753136, 21.485405, 22.327104, 23.285200, 23.836443, 24.447245, 25.156157, 25.991716, 26.385347, 26.801370, 27.286697, 27.821331, 28.408914, 28.743072, 29.141182, 29.605918, 30.090121, 30.678564, 31.384952, 32.233978, 33.512911, 34.408914, 35.520553, 37.469294, 40.431037, 42.293508, 46.711963},
    },
    {  // case 2, dim 5
      {31.328429, 34.997887, 38.331396, 40.125278, 41.958361, 44.944584, 47.811552, 49.796092, 51.444419, 52.901388, 54.232926, 55.486837, 56.671920, 57.853799, 59.058627, 60.271081, 61.507982, 62.817532, 64.232988, 65.775229, 67.541842, 68.524568, 69.618993, 70.877061, 72.320006, 72.976466, 73.724875, 74.517513, 75.448773, 76.497596, 77.105644, 77.778720, 78.522850, 79.336047, 80.303954, 81.468255, 82.870542, 84.732505, 86.097846, 87.875162, 90.948709, 94.393007, 97.098906, 102.664488},
      {10.619494, 12.246034, 13.724368, 14.493140, 15.396073, 16.854540, 18.235761, 19.249724, 20.095585, 20.843912, 21.530026, 22.210047, 22.855011, 23.502356, 24.155055, 24.843406, 25.549126, 26.306576, 27.107540, 27.983011, 29.032754, 29.625605, 30.291238, 31.046603, 31.958756, 32.394055, 32.835962, 33.314725, 33.882988, 34.559168, 34.952665, 35.371515, 35.792573, 36.352536, 36.958666, 37.692613, 38.617266, 39.892927, 40.844974, 42.163525, 44.245100, 46.822593, 48.865417, 53.019048},
    },
    {  // case 2, dim 6
      {48.714827, 53.519243, 57.662393, 59.823536, 62.180106, 65.859900, 69.299818, 71.635058, 73.648286, 75.410924, 77.010563, 78.493204, 79.929342, 81.341594, 82.764261, 84.212869, 85.700574, 87.265188, 88.902802, 90.730942, 92.826443, 93.943694, 95.198324, 96.602514, 98.281718, 99.043093, 99.881911, 100.866758, 101.918344, 103.093158, 103.765127, 104.578263, 105.379015, 106.262549, 107.453636, 108.720638, 110.324428, 112.578383, 113.912889, 115.888064, 119.499758, 123.746115, 126.589296, 133.587964},
      {14.737630, 16.566378, 18.114555, 18.952988, 19.983526, 21.571971, 23.102746, 24.170595, 25.093609, 25.920998, 26.677813, 27.407018, 28.105374, 28.790928, 29.506070, 30.235980, 30.985336, 31.780487, 32.669055, 33.622645, 34.725525, 35.351939, 36.082246, 36.892173, 37.848024, 38.286286, 38.764873, 39.319166, 39.910721, 40.565249, 40.986990, 41.449083, 41.957560, 42.524665, 43.191556, 44.012426, 45.008746, 46.442906, 47.448296, 48.790114, 50.977770, 53.658004, 55.606466, 60.425181},
    },
    {  // case 2, dim 7
      {70.795483, 75.861910, 80.812787, 83.414811, 86.284968, 90.700301, 94.845978, 97.668863, 99.956893, 101.984125, 103.838975, 105.546395, 107.222661, 108.874850, 110.500296, 112.124160, 113.828294, 115.562589, 117.465199, 119.516013, 121.861725, 123.151069, 124.616256, 126.290546, 128.221743, 129.100137, 130.038317, 131.091299, 132.238030, 133.578643, 134.341769, 135.138674, 136.103114, 137.149393, 138.392817, 139.849417, 141.727158, 144.238623, 145.860737, 148.647116, 152.180724, 156.507543, 159.466520, 165.782190},
      {18.656942, 20.763502, 22.523864, 23.569043, 24.634112, 26.363189, 28.003086, 29.191491, 30.197105, 31.082502, 31.878587, 32.666088, 33.422669, 34.161218, 34.923761, 35.694119, 36.502786, 37.350988, 38.262057, 39.278292, 40.458794, 41.138744, 41.869202, 42.711030, 43.728317, 44.210843, 44.746035, 45.307116, 45.963460, 46.689076, 47.125860, 47.569925, 48.075213, 48.674458, 49.371287, 50.236907, 51.231289, 52.679604, 53.620266, 55.008880, 57.365342, 60.019893, 61.906403, 65.409026},
    },
    {  // case 2, dim 8
      {95.747164, 102.330307, 107.980357, 111.024083, 114.341038, 119.422025, 124.201920, 127.474740, 130.079486, 132.412580, 134.529350, 136.507459, 138.406329, 140.238879, 142.058855, 143.926621, 145.853813, 147.857434, 149.974661, 152.322649, 154.993266, 156.466097, 158.102757, 159.926953, 162.050450, 163.012563, 164.044246, 165.235050, 166.537042, 168.004899, 168.845878, 169.800855, 170.806409, 171.905728, 173.293234, 174.839190, 176.787052, 179.581139, 181.534273, 184.420870, 188.696670, 193.898916, 198.339194, 205.893904},
      {23.189441, 25.161651, 27.165735, 28.165728, 29.345159, 31.266318, 33.079779, 34.332982, 35.381600, 36.319546, 37.169839, 37.970916, 38.770192, 39.566402, 40.390072, 41.203283, 42.057673, 42.949392, 43.935058, 45.006160, 46.233399, 46.929779, 47.697580, 48.618010, 49.683604, 50.175738, 50.694955, 51.271780, 51.929632, 52.721590, 53.139023, 53.631504, 54.184762, 54.785535, 55.534860, 56.442300, 57.545447, 59.049185, 60.139679, 61.637707, 63.904627, 67.067269, 68.675983, 73.437584},
    },
    {  // case 2, dim 9
      {125.527594, 132.604992, 139.377050, 142.427605, 146.224206, 152.103388, 157.462953, 161.103360, 164.113721, 166.693647, 169.071540, 171.326353, 173.440698, 175.488908, 177.566135, 179.621632, 181.791250, 183.976343, 186.308910, 188.889664, 191.817857, 193.436400, 195.196261, 197.253673, 199.597812, 200.684366, 201.889246, 203.182559, 204.725171, 206.365612, 207.310149, 208.365509, 209.558717, 210.709828, 212.232912, 214.003537, 216.073629, 219.077837, 221.288553, 224.081973, 228.590536, 234.156967, 238.433571, 246.645101},
      {27.641639, 29.819504, 31.817463, 32.903432, 34.140675, 36.134972, 38.035802, 39.388855, 40.493218, 41.475581, 42.392912, 43.264896, 44.111533, 44.956083, 45.810258, 46.660577, 47.551143, 48.472926, 49.520911, 50.665549, 51.971487, 52.680026, 53.501962, 54.419858, 55.502078, 55.987438, 56.536611, 57.172198, 57.875871, 58.679237, 59.126558, 59.618654, 60.182222, 60.809820, 61.552081, 62.449604, 63.559385, 65.179625, 66.264035, 67.766799, 70.406851, 73.310042, 75.482388, 78.727359},
    },
    {  // case 2, dim 10
      {158.531816, 167.025042, 174.210782, 177.795589, 182.010607, 188.645665, 194.601317, 198.638132, 201.931927, 204.847902, 207.482476, 209.916661, 212.300262, 214.538421, 216.784987, 219.094532, 221.477399, 223.905908, 226.507656, 229.320958, 232.551534, 234.356088, 236.339011, 238.636600, 241.274370, 242.451859, 243.758535, 245.077453, 246.691638, 248.527613, 249.524658, 250.546933, 251.819868, 253.266018, 254.820645, 256.781373, 259.076827, 262.516857, 264.662748, 267.538481, 272.213542, 277.891854, 283.783509, 292.242690},
      {32.021250, 34.302781, 36.556978, 37.774347, 39.059172, 41.186051, 43.174660, 44.550646, 45.728081, 46.759716, 47.714084, 48.602989, 49.485899, 50.356348, 51.215607, 52.124299, 53.054332, 54.037507, 55.079642, 56.254355, 57.590671, 58.348985, 59.206012, 60.144016, 61.257179, 61.788129, 62.344857, 62.962636, 63.662070, 64.483050, 64.964039, 65.521150, 66.104386, 66.739189, 67.493191, 68.399340, 69.621008, 71.299744, 72.425858, 74.007768, 76.506526, 79.710071, 81.954777, 86.173830},
    },
    {  // case 2, dim 11
      {195.394011, 205.438783, 213.122990, 217.540144, 222.112045, 229.121756, 235.672890, 240.185802, 243.828488, 246.922270, 249.758712, 252.492795, 255.062277, 257.576347, 260.064301, 262.521760, 265.123180, 267.819529, 270.641257, 273.753136, 277.265961, 279.275564, 281.392579, 283.844648, 286.687777, 287.930666, 289.347663, 290.922574, 292.627823, 294.734442, 295.883854, 297.143568, 298.392156, 299.809238, 301.491074, 303.686718, 306.390487, 309.852015, 312.326086, 315.697155, 321.025163, 327.903023, 334.332239, 343.923497},
      {36.231543, 39.023891, 41.292925, 42.609839, 44.016497, 46.213469, 48.258942, 49.752960, 50.946399, 52.012267, 53.012538, 53.969987, 54.879599, 55.776611, 56.688484, 57.605307, 58.559516, 59.585923, 60.640501, 61.865323, 63.268632, 64.066118, 64.938973, 65.905835, 67.084083, 67.635849, 68.198609, 68.842629, 69.552235, 70.399141, 70.891765, 71.417787, 72.011546, 72.691302, 73.461462, 74.449507, 75.643127, 77.303268, 78.449130, 79.912717, 82.514596, 85.663083, 87.936258, 92.825744},
    },
    {  // case 2, dim 12
      {234.969050, 247.481248, 256.341094, 260.854452, 265.648628, 273.572305, 280.651580, 285.585171, 289.555354, 293.028161, 296.134116, 299.067686, 301.879357, 304.569723, 307.318802, 310.005151, 312.787770, 315.708975, 318.822032, 322.223011, 325.978622, 328.075786, 330.377085, 332.946812, 336.081123, 337.535236, 339.081952, 340.796059, 342.702571, 344.859829, 346.086427, 347.300836, 348.816803, 350.489765, 352.404478, 354.599097, 357.376498, 361.126422, 363.897838, 367.217765, 372.930211, 379.622575, 383.863801, 393.377634},
      {41.119063, 43.823343, 46.393656, 47.636190, 49.059632, 51.259269, 53.428938, 54.976498, 56.258423, 57.362284, 58.386303, 59.376092, 60.322775, 61.257303, 62.196130, 63.126454, 64.103460, 65.178510, 66.298240, 67.533829, 68.962389, 69.782028, 70.681386, 71.698651, 72.906684, 73.444994, 74.075734, 74.780342, 75.531343, 76.404983, 76.893009, 77.389713, 77.977157, 78.651551, 79.458863, 80.402481, 81.596196, 83.199843, 84.292930, 86.026441, 88.420170, 91.655812, 94.578298, 100.978988},
    },
  },
  {
    {  // case 3, dim 1
      {0.000000, 0.000001, 0.000040, 0.000155, 0.000616, 0.003855, 0.015756, 0.036207, 0.064432, 0.101770, 0.148777, 0.206719, 0.276563, 0.360224, 0.456274, 0.571716, 0.710282, 0.874591, 1.073354, 1.321534, 1.643583, 1.839892, 2.072423, 2.359718, 2.714090, 2.882598, 3.070812, 3.284969, 3.547516, 3.847281, 4.028009, 4.249959, 4.469732, 4.733578, 5.049063, 5.431884, 5.929709, 6.586553, 7.060420, 7.818845, 8.937816, 10.573391, 11.988801, 14.653838},
      {0.000000, 0.000001, 0.000040, 0.000155, 0.000616, 0.003855, 0.015756, 0.036207, 0.064432, 0.101770, 0.148777, 0.206719, 0.276563, 0.360224, 0.456274, 0.571716, 0.710282, 0.874591, 1.073354, 1.321534, 1.643583, 1.839892, 2.072423, 2.359718, 2.714090, 2.882598, 3.070812, 3.284969, 3.547516, 3.847281, 4.028009, 4.249959, 4.469732, 4.733578, 5.049063, 5.431884, 5.929709, 6.586553, 7.060420, 7.818845, 8.937816, 10.573391, 11.988801, 14.653838},
    },
    {  // case 3, dim 2
      {1.128541, 1.547192, 1.988833, 2.300061, 2.668605, 3.330602, 4.021424, 4.570133, 5.056423, 5.500493, 5.929817, 6.359795, 6.787356, 7.214585, 7.653841, 8.122463, 8.612591, 9.143273, 9.732509, 10.377058, 11.149581, 11.595105, 12.102218, 12.692570, 13.413948, 13.732480, 14.091147, 14.500321, 14.933169, 15.462359, 15.769201, 16.105743, 16.501945, 16.977748, 17.459838, 18.046909, 18.831838, 19.927313, 20.674867, 21.705902, 23.415386, 25.712539, 27.396535, 31.018721},
      {0.991319, 1.354656, 1.769782, 2.029797, 2.349582, 2.948353, 3.580576, 4.065523, 4.506927, 4.912533, 5.306723, 5.694112, 6.082885, 6.475059, 6.883908, 7.312271, 7.771499, 8.268801, 8.808990, 9.426537, 10.154097, 10.571460, 11.045905, 11.605453, 12.280333, 12.587610, 12.928227, 13.321881, 13.757663, 14.260439, 14.537759, 14.840111, 15.218744, 15.604053, 16.102654, 16.719997, 17.471823, 18.514636, 19.253106, 20.289689, 21.951557, 24.059514, 25.791136, 29.005433},
    },
    {  // case 3, dim 3
      {5.715192, 7.134275, 8.399370, 9.086229, 9.918872, 11.348526, 12.754593, 13.754341, 14.593633, 15.390310, 16.111004, 16.803279, 17.477849, 18.155763, 18.832716, 19.533984, 20.273055, 21.045663, 21.893627, 22.840873, 23.945282, 24.575616, 25.252754, 26.063708, 26.975867, 27.431683, 27.915258, 28.437130, 29.036983, 29.720484, 30.133694, 30.552151, 30.999314, 31.558475, 32.218439, 32.937133, 33.889455, 35.214673, 36.155823, 37.365053, 39.600060, 42.211041, 43.981748, 49.086675},
      {3.350745, 4.215626, 5.092986, 5.548740, 6.106185, 7.062491, 8.008607, 8.729057, 9.337452, 9.893241, 10.417503, 10.934595, 11.439438, 11.947637, 12.461067, 12.983277, 13.549162, 14.160079, 14.801645, 15.541049, 16.377314, 16.867993, 17.416221, 18.046912, 18.831723, 19.189506, 19.591579, 20.024296, 20.503340, 21.082636, 21.409262, 21.788642, 22.213552, 22.656808, 23.188152, 23.806490, 24.628305, 25.697862, 26.479362, 27.493310, 29.385342, 31.716586, 32.991966, 36.668757},
    },
    {  // case 3, dim 4
      {14.453950, 16.636876, 18.762231, 19.898427, 21.243260, 23.399687, 25.435602, 26.884892, 28.103576, 29.149301, 30.131288, 31.061953, 31.981756, 32.912938, 33.813667, 34.742491, 35.701446, 36.717231, 37.809575, 39.002477, 40.415969, 41.199634, 42.060309, 43.050331, 44.209008, 44.764461, 45.366797, 46.037742, 46.763053, 47.639317, 48.133948, 48.658086, 49.251300, 49.884898, 50.717263, 51.665889, 52.760229, 54.370876, 55.529824, 57.026745, 59.053292, 62.114906, 64.615870, 69.295560},
      {6.538220, 7.698979, 8.825997, 9.478990, 10.197692, 11.423071, 12.609873, 13.481745, 14.198847, 14.861691, 15.473359, 16.078871, 16.653067, 17.235767, 17.810737, 18.420662, 19.052364, 19.716711, 20.462906, 21.292800, 22.250163, 22.798823, 23.399832, 24.110792, 24.956039, 25.358510, 25.782369, 26.224821, 26.769840, 27.412882, 27.764030, 28.147102, 28.568082, 29.045483, 29.617127, 30.313601, 31.179428, 32.388147, 33.347887, 34.594095, 36.549606, 39.187370, 41.122353, 44.135581},
    },
    {  // case 3, dim 5
      {27.257190, 30.434615, 33.452633, 34.921500, 36.735236, 39.535835, 42.191182, 44.077606, 45.587224, 46.936573, 48.179417, 49.359369, 50.481903, 51.610660, 52.742146, 53.864182, 55.053613, 56.302793, 57.611335, 59.059880, 60.740643, 61.698472, 62.763445, 63.965842, 65.383291, 66.000050, 66.671507, 67.447484, 68.308914, 69.333898, 69.885758, 70.560504, 71.262876, 72.121270, 73.028647, 74.213920, 75.594565, 77.528166, 78.885458, 80.625960, 83.524472, 86.989507, 89.656779, 95.289282},
      {10.164545, 11.565189, 13.002772, 13.766282, 14.645215, 16.041240, 17.401194, 18.385714, 19.202512, 19.950372, 20.638398, 21.290483, 21.933798, 22.572585, 23.241195, 23.917539, 24.604887, 25.345575, 26.151584, 27.036109, 28.064221, 28.671734, 29.322642, 30.087439, 30.999122, 31.431394, 31.886279, 32.372294, 32.926529, 33.597822, 33.977049, 34.393237, 34.891216, 35.421306, 36.018707, 36.765836, 37.732713, 39.136825, 40.032951, 41.381028, 43.521555, 46.151041, 47.846984, 51.767230},
    },
    {  // case 3, dim 6
      {44.281067, 48.065949, 52.053903, 53.861018, 56.035771, 59.553200, 62.827790, 65.088457, 66.995334, 68.659199, 70.148353, 71.561526, 72.910581, 74.238552, 75.574613, 76.921836, 78.307836, 79.736295, 81.343795, 83.058302, 85.005970, 86.105722, 87.341838, 88.707408, 90.328337, 91.061044, 91.849091, 92.688522, 93.740686, 94.894164, 95.554923, 96.298877, 97.055232, 97.964676, 99.051268, 100.348531, 101.952628, 104.143822, 105.561287, 107.458010, 110.686733, 114.649242, 117.599041, 124.916274},
      {13.789540, 15.795932, 17.430141, 18.244286, 19.180928, 20.764070, 22.263813, 23.355026, 24.277223, 25.085125, 25.838633, 26.551111, 27.251591, 27.929816, 28.628063, 29.342660, 30.091644, 30.900172, 31.755850, 32.730749, 33.852784, 34.471757, 35.184811, 35.998040, 36.915039, 37.347538, 37.837888, 38.376053, 38.971403, 39.711729, 40.098366, 40.540971, 41.043350, 41.598981, 42.237960, 43.030625, 44.111559, 45.407947, 46.429748, 47.663325, 49.920545, 52.788161, 54.963133, 59.762829},
    },
    {  // case 3, dim 7
      {64.276796, 69.312092, 74.039861, 76.412359, 79.251815, 83.428319, 87.276369, 89.948563, 92.152058, 94.054837, 95.863882, 97.524022, 99.124112, 100.666952, 102.219829, 103.826996, 105.484502, 107.192783, 109.048226, 111.058329, 113.312514, 114.557753, 115.937996, 117.536499, 119.378764, 120.195722, 121.121841, 122.175645, 123.306053, 124.619156, 125.355700, 126.198640, 127.087309, 128.055366, 129.309597, 130.628328, 132.395841, 134.877884, 136.662007, 138.990544, 142.584703, 147.219511, 150.287732, 155.723312},
      {18.044578, 20.011056, 21.777411, 22.713386, 23.793497, 25.494410, 27.162589, 28.357799, 29.345088, 30.240132, 31.033616, 31.810967, 32.578016, 33.318893, 34.079242, 34.837868, 35.646083, 36.491825, 37.415204, 38.427695, 39.608736, 40.268943, 41.019643, 41.894586, 42.924496, 43.380886, 43.929423, 44.529298, 45.130690, 45.857220, 46.288077, 46.744326, 47.283728, 47.896583, 48.571395, 49.393955, 50.472211, 51.837364, 52.787263, 54.113885, 56.408058, 59.445971, 61.263622, 65.435291},
    },
    {  // case 3, dim 8
      {87.615754, 94.561011, 100.302445, 103.109204, 106.180637, 111.178380, 115.792524, 118.877542, 121.380718, 123.626184, 125.708820, 127.610445, 129.437986, 131.217862, 132.966924, 134.716635, 136.578673, 138.531889, 140.575920, 142.830529, 145.373919, 146.804993, 148.384885, 150.169925, 152.192693, 153.102202, 154.152352, 155.280118, 156.521475, 157.885532, 158.738785, 159.669123, 160.704276, 161.815877, 163.174607, 164.748885, 166.819309, 169.485014, 171.377779, 173.828661, 178.090025, 183.251098, 186.825521, 192.303198},
      {22.034196, 24.381407, 26.388745, 27.417991, 28.596309, 30.462919, 32.249379, 33.505699, 34.568576, 35.491264, 36.353799, 37.176358, 37.950038, 38.717428, 39.539074, 40.362371, 41.210584, 42.101425, 43.078217, 44.175449, 45.405573, 46.122576, 46.920508, 47.822098, 48.881903, 49.336940, 49.855162, 50.444421, 51.094018, 51.842455, 52.294509, 52.780912, 53.321921, 53.949038, 54.598440, 55.404892, 56.528754, 58.033102, 59.128168, 60.543034, 62.753131, 66.450684, 68.625962, 72.822380},
    },
    {  // case 3, dim 9
      {117.375013, 124.864000, 130.740734, 133.850495, 137.517041, 142.932193, 147.932157, 151.548147, 154.413832, 156.898776, 159.182736, 161.335922, 163.399252, 165.405447, 167.369142, 169.372574, 171.459466, 173.552681, 175.815672, 178.298765, 181.115212, 182.622839, 184.323946, 186.321346, 188.635232, 189.675839, 190.834494, 192.129949, 193.547895, 195.175226, 196.072557, 197.084740, 198.235257, 199.535397, 200.946395, 202.669363, 204.792019, 207.736516, 209.671765, 212.371162, 217.090646, 223.139388, 227.643562, 234.567809},
      {26.943554, 29.092308, 31.156758, 32.212365, 33.404656, 35.384527, 37.257989, 38.621497, 39.728775, 40.696377, 41.594290, 42.455844, 43.283667, 44.092703, 44.938983, 45.807331, 46.676152, 47.637888, 48.644228, 49.763635, 51.047891, 51.786699, 52.598443, 53.522840, 54.603937, 55.083219, 55.646935, 56.246953, 56.949880, 57.766533, 58.257261, 58.747067, 59.321937, 59.927781, 60.690728, 61.546825, 62.689227, 64.255558, 65.387761, 66.852068, 69.325535, 72.183925, 74.258606, 79.766343},
    },
    {  // case 3, dim 10
      {149.914252, 157.472377, 164.823641, 168.303751, 172.293860, 178.530750, 184.261628, 188.202951, 191.412994, 194.207028, 196.726227, 199.062610, 201.296871, 203.485785, 205.722902, 207.922767, 210.234883, 212.586446, 215.152231, 217.857560, 220.955496, 222.757997, 224.722015, 226.849668, 229.365925, 230.483722, 231.753276, 233.167509, 234.652743, 236.410322, 237.464561, 238.594701, 239.776918, 241.177330, 242.753936, 244.598713, 247.049071, 250.285731, 252.598385, 255.564041, 260.689078, 267.199513, 271.377322, 279.295640},
      {31.254633, 33.629314, 35.845779, 37.009450, 38.332119, 40.430132, 42.401851, 43.775565, 44.950217, 45.989743, 46.935454, 47.843059, 48.705167, 49.548960, 50.405356, 51.291343, 52.231473, 53.201395, 54.248115, 55.425303, 56.775105, 57.536871, 58.393251, 59.341644, 60.447807, 60.964248, 61.553682, 62.187078, 62.908011, 63.739066, 64.221544, 64.768924, 65.359782, 65.992581, 66.791236, 67.733345, 68.820638, 70.457857, 71.538051, 73.117236, 75.567815, 79.232771, 81.700402, 86.060730},
    },
    {  // case 3, dim 11
      {183.335428, 193.672358, 202.154454, 206.420314, 211.131944, 218.010331, 224.273719, 228.671893, 232.190026, 235.302183, 238.067411, 240.701367, 243.196250, 245.647141, 248.042583, 250.492498, 252.944351, 255.544766, 258.319202, 261.345041, 264.780774, 266.692842, 268.799667, 271.199797, 273.891355, 275.149391, 276.512766, 278.033682, 279.751291, 281.631269, 282.820647, 284.013874, 285.360903, 286.827724, 288.629112, 290.729461, 293.255276, 296.391849, 298.531357, 302.080923, 306.560084, 313.131377, 318.862210, 327.844490},
      {35.619409, 38.219873, 40.578485, 41.805182, 43.137806, 45.434194, 47.519138, 49.008576, 50.202017, 51.314750, 52.309413, 53.256206, 54.162520, 55.047856, 55.960425, 56.883324, 57.823045, 58.807807, 59.898753, 61.121065, 62.518568, 63.308587, 64.151921, 65.150617, 66.365551, 66.888951, 67.489229, 68.124666, 68.863930, 69.706250, 70.196435, 70.739826, 71.368043, 72.061809, 72.882628, 73.785021, 74.978845, 76.547932, 77.659593, 79.433480, 82.188605, 85.575160, 87.767468, 93.982444},
    },
    {  // case 3, dim 12
      {225.840406, 235.669264, 244.520076, 248.737810, 253.708338, 261.296467, 268.354954, 273.035247, 276.981833, 280.311839, 283.356073, 286.187104, 288.976769, 291.614072, 294.234728, 296.882054, 299.598630, 302.445715, 305.421840, 308.780333, 312.415196, 314.532354, 316.797640, 319.358382, 322.346120, 323.632096, 325.077048, 326.618991, 328.452601, 330.496027, 331.617816, 332.899830, 334.303261, 335.924247, 337.922753, 339.964612, 342.734808, 346.542988, 349.193820, 352.774124, 358.985696, 366.982669, 372.788090, 383.251086},
      {40.685781, 43.180114, 45.592313, 46.875313, 48.297051, 50.521969, 52.746751, 54.255392, 55.493343, 56.599875, 57.612975, 58.584936, 59.531774, 60.458628, 61.404919, 62.337618, 63.320401, 64.379579, 65.507770, 66.750420, 68.163557, 68.965348, 69.869760, 70.872894, 72.086840, 72.661179, 73.283062, 73.964613, 74.740895, 75.654540, 76.161862, 76.710693, 77.319379, 78.033298, 78.828330, 79.748491, 80.922242, 82.583790, 83.603120, 85.363336, 88.349177, 91.659663, 94.205250, 99.429079},
    },
  },
  {
    {  // case 4, dim 1
      {0.724921, 0.993355, 1.329008, 1.532606, 1.786176, 2.252550, 2.782413, 3.205703, 3.587134, 3.939522, 4.278760, 4.611628, 4.960656, 5.305330, 5.670626, 6.048655, 6.467834, 6.921577, 7.416242, 7.984684, 8.654236, 9.057466, 9.504116, 10.024576, 10.643993, 10.925283, 11.244866, 11.601532, 11.999507, 12.498162, 12.768408, 13.074378, 13.414501, 13.787225, 14.241374, 14.786932, 15.496376, 16.520537, 17.182573, 18.109757, 19.664670, 21.860090, 23.232498, 26.909704},
      {0.724921, 0.993355, 1.329008, 1.532606, 1.786176, 2.252550, 2.782413, 3.205703, 3.587134, 3.939522, 4.278760, 4.611628, 4.960656, 5.305330, 5.670626, 6.048655, 6.467834, 6.921577, 7.416242, 7.984684, 8.654236, 9.057466, 9.504116, 10.024576, 10.643993, 10.925283, 11.244866, 11.601532, 11.999507, 12.498162, 12.768408, 13.074378, 13.414501, 13.787225, 14.241374, 14.786932, 15.496376, 16.520537, 17.182573, 18.109757, 19.664670, 21.860090, 23.232498, 26.909704},
    },
    {  // case 4, dim 2
      {4.570367, 5.614518, 6.775431, 7.373897, 8.105827, 9.298739, 10.472914, 11.361184, 12.095326, 12.767608, 13.398865, 14.001717, 14.603611, 15.208370, 15.816308, 16.438022, 17.097561, 17.794383, 18.549895, 19.415933, 20.420032, 21.002197, 21.626436, 22.362006, 23.230198, 23.607476, 24.035833, 24.518384, 25.052184, 25.695949, 26.057334, 26.521300, 26.948598, 27.478557, 28.049393, 28.792872, 29.713275, 31.008734, 31.850276, 33.096442, 35.084900, 37.494500, 39.219572, 44.209158},
      {2.809250, 3.524045, 4.325262, 4.716516, 5.249164, 6.101996, 6.965446, 7.631567, 8.197942, 8.704929, 9.185473, 9.654116, 10.109902, 10.593283, 11.074316, 11.573263, 12.109691, 12.665166, 13.296112, 13.987983, 14.807647, 15.267802, 15.794899, 16.408910, 17.143478, 17.481600, 17.858867, 18.271435, 18.744587, 19.328799, 19.626032, 19.971870, 20.361846, 20.788591, 21.328023, 21.922446, 22.670277, 23.759885, 24.533367, 25.567510, 27.439886, 29.879790, 31.587280, 35.623825},
    },
    {  // case 4, dim 3
      {12.577277, 14.517145, 16.364684, 17.405140, 18.539349, 20.434465, 22.221102, 23.547857, 24.659911, 25.626276, 26.517618, 27.375433, 28.204528, 29.026349, 29.857250, 30.698872, 31.579380, 32.506055, 33.507701, 34.623624, 35.898891, 36.619941, 37.441283, 38.373228, 39.443093, 39.978105, 40.526562, 41.117807, 41.813871, 42.633815, 43.060534, 43.551889, 44.071681, 44.687572, 45.421533, 46.285081, 47.422583, 48.948296, 49.978515, 51.439491, 53.888842, 56.829073, 59.379883, 66.416216},
      {5.798196, 6.918332, 7.970545, 8.539778, 9.221596, 10.352034, 11.450846, 12.264862, 12.951198, 13.582026, 14.176436, 14.737967, 15.285564, 15.850844, 16.412374, 16.991143, 17.597997, 18.263194, 18.974870, 19.758950, 20.681347, 21.204152, 21.797407, 22.474125, 23.262843, 23.620155, 24.026863, 24.480867, 24.992582, 25.577673, 25.938041, 26.337059, 26.775063, 27.268471, 27.813423, 28.538361, 29.381252, 30.601178, 31.386486, 32.378191, 34.250858, 37.219264, 39.330395, 45.378396},
    },
    {  // case 4, dim 4
      {23.698440, 26.886673, 29.725904, 31.129569, 32.861428, 35.461879, 37.920026, 39.645240, 41.061606, 42.312938, 43.486839, 44.587532, 45.646026, 46.701052, 47.748734, 48.824308, 49.946146, 51.111943, 52.346636, 53.739884, 55.297111, 56.157597, 57.159132, 58.278957, 59.581387, 60.176742, 60.832748, 61.560883, 62.400810, 63.359748, 63.914438, 64.567034, 65.246145, 66.044616, 66.835452, 67.891131, 69.227268, 71.121638, 72.388970, 74.115482, 77.347494, 80.902550, 82.918762, 88.529892},
      {9.078698, 10.616578, 11.924022, 12.667329, 13.496742, 14.810956, 16.122874, 17.088809, 17.876119, 18.591078, 19.242739, 19.886579, 20.517570, 21.124639, 21.745292, 22.393986, 23.083083, 23.801027, 24.581930, 25.452344, 26.479056, 27.047325, 27.674982, 28.419189, 29.296953, 29.705424, 30.139575, 30.629497, 31.222363, 31.893474, 32.281589, 32.707062, 33.164104, 33.681685, 34.326530, 35.059180, 36.022559, 37.340863, 38.258794, 39.528852, 41.685837, 44.009338, 46.149862, 49.945852},
    },
    {  // case 4, dim 5
      {39.949455, 43.812181, 47.364731, 49.087823, 51.142487, 54.395400, 57.452055, 59.656111, 61.428325, 62.948946, 64.359594, 65.669826, 66.969840, 68.237305, 69.524273, 70.815989, 72.145448, 73.563928, 75.060224, 76.693011, 78.565396, 79.623550, 80.799541, 82.120810, 83.659077, 84.371416, 85.123723, 86.001806, 86.926153, 87.999795, 88.657487, 89.392414, 90.137504, 91.006921, 92.102087, 93.273104, 94.797743, 96.966743, 98.354395, 100.289233, 103.698031, 107.788577, 110.900709, 117.648747},
      {12.936540, 14.676348, 16.109614, 16.940058, 17.918648, 19.418149, 20.929012, 21.995697, 22.872219, 23.648917, 24.359426, 25.057814, 25.744531, 26.427827, 27.108001, 27.813633, 28.536343, 29.315466, 30.161834, 31.103659, 32.219482, 32.851310, 33.541686, 34.337264, 35.256567, 35.680872, 36.154496, 36.670063, 37.277621, 37.964247, 38.345169, 38.769277, 39.250165, 39.797292, 40.434264, 41.217657, 42.233987, 43.567694, 44.481320, 45.931912, 48.290424, 51.349116, 52.884414, 56.939147},
    },
    {  // case 4, dim 6
      {59.175204, 64.070885, 68.607987, 70.708804, 73.335964, 77.287592, 81.054519, 83.594528, 85.676183, 87.511452, 89.203732, 90.756798, 92.281642, 93.777062, 95.288469, 96.824047, 98.394980, 100.029082, 101.768742, 103.651355, 105.772883, 106.987859, 108.288612, 109.789125, 111.540083, 112.368238, 113.274041, 114.266884, 115.315198, 116.592267, 117.354908, 118.101567, 118.976777, 119.939261, 121.053709, 122.401410, 124.175250, 126.323294, 127.897758, 130.143175, 133.865346, 138.789278, 141.547549, 148.290106},
      {16.933006, 18.757211, 20.561157, 21.482732, 22.532855, 24.229371, 25.821471, 26.999888, 27.955191, 28.815770, 29.609862, 30.354203, 31.093470, 31.815915, 32.544739, 33.309232, 34.088728, 34.921751, 35.835898, 36.827750, 37.994442, 38.652549, 39.379607, 40.201068, 41.194112, 41.668308, 42.168714, 42.726042, 43.336890, 44.090977, 44.496341, 44.957228, 45.504334, 46.066647, 46.745437, 47.575200, 48.550578, 50.045983, 51.020061, 52.370916, 54.606037, 57.410932, 59.290614, 63.154756},
    },
    {  // case 4, dim 7
      {83.529207, 88.694295, 93.703046, 96.446109, 99.533964, 104.247490, 108.516153, 111.460889, 113.935069, 116.000517, 117.905047, 119.742651, 121.486294, 123.196989, 124.911648, 126.632636, 128.415981, 130.269722, 132.256939, 134.400957, 136.856933, 138.276932, 139.799871, 141.495692, 143.441167, 144.384968, 145.323292, 146.435636, 147.711142, 149.097534, 149.856337, 150.748674, 151.785204, 152.927710, 154.130855, 155.627727, 157.475730, 159.956666, 161.750760, 164.148187, 168.255225, 173.937725, 177.233222, 187.012067},
      {21.142468, 23.175965, 25.083781, 26.106460, 27.258633, 29.118597, 30.849099, 32.073854, 33.084129, 33.983506, 34.828219, 35.630626, 36.417819, 37.192558, 37.970689, 38.786826, 39.605746, 40.491721, 41.446405, 42.504957, 43.731588, 44.432356, 45.199583, 46.068367, 47.101555, 47.565620, 48.091883, 48.681570, 49.351427, 50.131589, 50.567726, 51.024489, 51.545621, 52.153100, 52.870854, 53.716247, 54.793190, 56.245577, 57.253639, 58.670415, 61.031919, 63.825796, 66.087309, 71.446883},
    },
    {  // case 4, dim 8
      {109.736042, 116.196952, 122.749921, 125.918224, 129.346520, 134.781265, 139.616112, 143.065225, 145.842744, 148.244155, 150.412113, 152.559328, 154.571432, 156.457106, 158.423530, 160.303155, 162.295506, 164.380594, 166.604336, 169.032994, 171.781566, 173.350256, 175.028591, 176.935335, 179.232901, 180.219064, 181.290009, 182.538274, 183.885982, 185.407222, 186.196666, 187.140985, 188.219032, 189.468921, 190.848067, 192.553401, 194.805009, 197.830193, 199.776304, 202.412647, 206.919784, 211.229833, 215.211183, 224.649219},
      {25.234742, 27.732945, 29.818979, 30.889735, 32.077847, 33.986470, 35.832142, 37.135530, 38.230237, 39.199524, 40.095859, 40.928727, 41.755694, 42.554582, 43.367866, 44.218569, 45.107115, 46.023091, 47.026423, 48.133205, 49.426617, 50.157884, 50.951021, 51.870287, 52.926556, 53.401106, 53.950002, 54.565701, 55.248652, 56.037915, 56.477021, 56.967745, 57.510550, 58.172519, 58.935359, 59.853793, 61.049033, 62.655650, 63.763250, 65.230141, 67.804492, 70.702994, 73.280660, 77.702295},
    },
    {  // case 4, dim 9
      {142.165379, 149.149054, 156.114199, 159.455740, 163.513658, 169.560912, 175.053276, 178.845118, 181.944208, 184.606066, 187.047404, 189.340088, 191.491088, 193.664760, 195.794651, 197.955136, 200.154378, 202.470655, 205.014488, 207.623323, 210.647889, 212.340254, 214.165472, 216.286364, 218.640555, 219.764095, 221.017086, 222.362571, 223.814096, 225.541348, 226.501800, 227.516871, 228.754119, 230.025068, 231.494135, 233.331503, 235.749016, 238.846219, 241.075934, 243.821252, 248.547572, 254.445840, 258.531143, 266.798193},
      {29.957932, 32.502010, 34.551104, 35.615809, 36.951195, 38.948590, 40.915112, 42.319774, 43.476665, 44.486142, 45.412045, 46.290475, 47.150959, 47.999946, 48.859977, 49.750810, 50.675753, 51.640054, 52.650094, 53.790509, 55.096624, 55.868235, 56.670311, 57.611537, 58.716836, 59.225516, 59.806478, 60.441854, 61.184809, 62.007426, 62.474357, 63.019661, 63.618615, 64.275657, 65.072077, 65.955967, 67.141883, 68.698126, 69.868436, 71.266206, 73.572989, 76.188684, 78.158918, 83.914113},
    },
    {  // case 4, dim 10
      {175.057016, 184.792615, 192.851449, 196.859531, 201.200665, 207.831825, 213.998624, 218.278219, 221.713220, 224.674615, 227.437568, 229.946593, 232.338802, 234.672729, 236.981689, 239.323022, 241.792881, 244.295991, 246.968183, 249.869833, 253.114779, 254.951633, 257.043904, 259.389798, 262.077636, 263.328224, 264.583200, 266.014257, 267.621062, 269.477713, 270.603160, 271.792549, 273.110594, 274.714640, 276.335238, 278.304148, 280.800926, 284.012137, 286.283245, 289.296303, 294.916243, 301.730026, 306.101806, 315.654013},
      {34.793721, 36.941682, 39.315962, 40.474372, 41.826157, 44.050649, 46.065797, 47.492441, 48.698967, 49.760121, 50.711940, 51.628847, 52.519786, 53.397168, 54.295396, 55.197256, 56.125385, 57.115544, 58.191183, 59.379376, 60.719075, 61.502693, 62.343601, 63.354630, 64.493557, 65.022476, 65.600297, 66.254894, 66.992238, 67.817379, 68.276976, 68.842866, 69.435714, 70.117756, 70.952274, 71.876839, 73.140081, 74.666341, 75.820323, 77.396470, 80.000551, 83.501192, 85.981439, 90.328814},
    },
    {  // case 4, dim 11
      {214.586873, 224.544862, 233.571771, 237.842298, 242.664042, 250.141756, 256.909185, 261.538266, 265.353881, 268.638185, 271.620939, 274.411726, 277.040024, 279.554272, 282.101737, 284.732058, 287.397630, 290.104100, 293.021154, 296.284862, 299.846637, 301.877256, 304.085983, 306.563381, 309.425943, 310.741788, 312.169194, 313.736854, 315.510911, 317.560697, 318.725165, 320.009407, 321.408689, 322.952079, 324.851883, 326.889508, 329.366418, 332.970005, 335.521992, 339.030401, 344.439987, 351.272984, 356.531347, 368.582219},
      {38.773526, 41.696035, 44.174168, 45.354613, 46.811315, 49.082004, 51.216990, 52.707858, 53.960821, 55.067338, 56.059727, 57.005742, 57.940303, 58.844718, 59.763553, 60.711977, 61.667288, 62.699911, 63.793043, 65.014230, 66.400052, 67.187689, 68.082356, 69.112696, 70.288736, 70.841438, 71.434644, 72.087337, 72.851330, 73.700411, 74.193550, 74.725849, 75.366442, 76.055685, 76.892225, 77.833239, 79.030607, 80.683153, 81.873450, 83.588683, 86.140884, 89.640208, 92.089086, 97.771949},
    },
    {  // case 4, dim 12
      {256.896297, 268.765139, 278.604458, 283.352262, 288.275129, 296.317152, 303.696106, 308.696578, 312.812250, 316.418740, 319.655095, 322.683640, 325.601489, 328.393962, 331.146981, 333.934297, 336.795257, 339.741511, 342.903079, 346.380784, 350.265327, 352.427043, 354.791611, 357.405848, 360.548358, 361.955707, 363.449052, 365.171535, 367.049232, 369.171072, 370.330649, 371.658446, 373.126489, 374.804339, 376.879007, 379.363913, 382.224084, 386.309273, 389.320737, 393.242872, 399.317055, 405.986281, 411.054613, 420.003028},
      {43.249969, 46.402555, 49.056811, 50.332190, 51.815368, 54.125317, 56.288341, 57.876802, 59.169259, 60.296258, 61.356277, 62.363113, 63.313468, 64.268172, 65.213454, 66.175933, 67.164112, 68.243587, 69.397358, 70.642438, 72.061588, 72.888389, 73.793307, 74.814066, 76.062661, 76.653691, 77.260438, 77.977123, 78.742990, 79.621955, 80.129016, 80.684382, 81.314000, 82.093700, 82.930343, 83.904398, 85.175164, 86.973336, 88.129242, 89.653614, 92.346268, 96.077520, 98.561418, 104.557980},
    },
  },
  {
    {  // case 5, dim 1
      {0.000000, 0.000001, 0.000038, 0.000152, 0.000610, 0.003849, 0.015460, 0.035092, 0.063600, 0.100079, 0.146555, 0.205270, 0.275592, 0.357769, 0.455672, 0.570726, 0.711059, 0.877097, 1.075485, 1.321913, 1.639749, 1.837606, 2.074653, 2.357221, 2.702793, 2.875489, 3.062966, 3.269394, 3.524787, 3.808187, 3.978401, 4.177384, 4.398348, 4.657723, 4.981123, 5.349953, 5.844968, 6.610296, 7.114510, 7.878032, 9.089018, 10.720263, 11.916118, 14.892052},
      {0.000000, 0.000001, 0.000038, 0.000152, 0.000610, 0.003849, 0.015460, 0.035092, 0.063600, 0.100079, 0.146555, 0.205270, 0.275592, 0.357769, 0.455672, 0.570726, 0.711059, 0.877097, 1.075485, 1.321913, 1.639749, 1.837606, 2.074653, 2.357221, 2.702793, 2.875489, 3.062966, 3.269394, 3.524787, 3.808187, 3.978401, 4.177384, 4.398348, 4.657723, 4.981123, 5.349953, 5.844968, 6.610296, 7.114510, 7.878032, 9.089018, 10.720263, 11.916118, 14.892052},
    },
    {  // case 5, dim 2
      {1.820523, 2.357074, 3.014776, 3.381851, 3.862421, 4.678198, 5.543680, 6.213360, 6.771632, 7.292752, 7.795383, 8.279185, 8.763696, 9.252590, 9.749736, 10.268899, 10.821176, 11.408148, 12.064325, 12.799383, 13.673454, 14.148994, 14.713706, 15.339268, 16.086164, 16.433127, 16.800190, 17.218013, 17.694145, 18.245126, 18.547274, 18.898798, 19.344213, 19.809760, 20.324956, 20.971921, 21.803348, 22.876228, 23.670383, 24.814708, 26.586006, 29.368689, 30.947967, 35.747422},
      {1.682279, 2.116435, 2.687583, 3.047942, 3.475874, 4.216503, 5.007803, 5.610262, 6.134606, 6.608926, 7.077993, 7.532078, 7.988933, 8.453148, 8.926098, 9.400643, 9.911197, 10.474089, 11.095003, 11.792658, 12.605325, 13.083777, 13.613044, 14.191467, 14.921585, 15.247308, 15.618015, 16.016345, 16.482884, 17.020924, 17.342989, 17.691698, 18.069618, 18.510527, 19.034341, 19.671897, 20.505542, 21.644032, 22.369153, 23.443063, 25.184982, 27.819069, 29.552832, 34.155604},
    },
    {  // case 5, dim 3
      {8.256604, 9.651560, 11.171130, 12.012657, 12.998220, 14.580389, 16.170393, 17.343663, 18.289840, 19.155536, 19.958499, 20.738211, 21.481688, 22.224233, 22.977086, 23.756250, 24.575725, 25.424220, 26.355039, 27.393124, 28.575970, 29.253880, 30.007329, 30.850554, 31.866113, 32.337236, 32.857418, 33.422888, 34.055052, 34.817867, 35.227267, 35.693276, 36.207304, 36.836679, 37.516047, 38.367284, 39.466755, 40.863457, 41.924858, 43.177560, 45.464698, 48.413870, 50.247369, 54.148416},
      {4.687499, 5.692880, 6.633138, 7.164539, 7.808539, 8.910236, 9.996021, 10.789983, 11.465424, 12.071588, 12.654524, 13.220471, 13.763838, 14.316792, 14.882889, 15.461110, 16.070366, 16.722758, 17.437150, 18.230723, 19.158684, 19.691879, 20.263863, 20.942835, 21.739475, 22.095508, 22.513658, 22.979573, 23.505983, 24.114260, 24.468035, 24.861558, 25.291695, 25.768787, 26.343062, 27.056981, 27.884694, 29.134800, 29.952511, 31.028115, 32.839817, 35.642912, 37.271036, 41.734466},
    },
    {  // case 5, dim 4
      {18.514188, 21.099098, 23.514181, 24.839342, 26.322972, 28.725170, 30.969296, 32.580192, 33.895800, 35.046646, 36.128470, 37.146601, 38.138485, 39.114461, 40.093626, 41.110062, 42.129346, 43.238738, 44.426385, 45.696122, 47.195273, 48.038231, 48.965428, 50.033051, 51.283463, 51.898095, 52.526275, 53.237064, 54.014730, 54.910988, 55.446611, 55.994215, 56.583207, 57.292471, 58.156281, 59.125408, 60.332779, 61.986092, 63.120311, 64.601987, 67.250505, 70.449361, 73.188496, 79.406978},
      {8.241559, 9.533117, 10.787304, 11.478893, 12.276844, 13.613738, 14.924800, 15.856771, 16.645484, 17.346253, 17.989651, 18.627703, 19.242588, 19.871991, 20.501268, 21.136472, 21.814626, 22.543680, 23.334225, 24.212209, 25.218522, 25.805126, 26.465374, 27.197525, 28.048596, 28.447786, 28.912824, 29.429328, 29.964904, 30.611626, 30.986028, 31.390291, 31.822833, 32.384057, 33.014621, 33.758220, 34.645927, 35.854321, 36.758295, 37.984065, 40.044882, 42.572114, 44.508141, 48.144825},
    },
    {  // case 5, dim 5
      {32.431214, 36.910663, 40.085137, 41.694297, 43.638478, 46.796302, 49.701228, 51.737584, 53.376497, 54.859480, 56.216037, 57.470243, 58.676755, 59.869471, 61.052427, 62.278467, 63.552603, 64.876286, 66.306292, 67.840774, 69.586194, 70.615736, 71.753198, 72.999770, 74.488713, 75.185029, 75.919364, 76.718258, 77.661305, 78.681057, 79.286911, 79.974178, 80.684523, 81.538145, 82.520566, 83.763008, 85.239208, 87.081978, 88.571498, 90.339617, 93.840477, 97.325699, 100.411904, 105.429919},
      {11.870852, 13.628817, 15.160715, 15.963455, 16.885386, 18.439180, 19.845421, 20.912626, 21.767014, 22.558004, 23.290898, 23.985734, 24.674623, 25.347675, 26.021925, 26.715225, 27.445666, 28.237211, 29.093526, 30.039743, 31.090684, 31.710600, 32.400941, 33.206442, 34.129119, 34.558055, 35.011824, 35.546270, 36.165925, 36.887902, 37.281818, 37.716085, 38.203651, 38.757439, 39.377874, 40.154375, 41.146439, 42.444138, 43.452908, 44.758801, 46.822534, 49.441651, 51.052040, 55.025871},
    },
    {  // case 5, dim 6
      {52.005869, 56.398240, 60.682825, 62.809816, 65.185216, 68.880112, 72.302100, 74.717428, 76.717725, 78.466356, 80.066669, 81.574562, 83.008472, 84.429647, 85.822266, 87.240734, 88.721014, 90.275949, 91.917204, 93.749202, 95.843814, 96.984888, 98.249337, 99.722443, 101.460012, 102.246393, 103.095245, 104.056287, 105.136693, 106.382061, 107.087841, 107.847058, 108.651707, 109.592031, 110.710896, 112.011257, 113.619858, 115.788911, 117.191303, 119.402134, 122.830037, 127.254775, 130.270076, 136.574163},
      {16.183363, 17.971410, 19.750401, 20.642918, 21.641972, 23.271735, 24.839683, 25.973053, 26.930673, 27.782763, 28.558458, 29.305328, 30.033256, 30.753096, 31.490983, 32.237683, 33.020905, 33.838851, 34.721554, 35.739480, 36.884736, 37.537543, 38.265485, 39.121319, 40.106353, 40.541291, 41.031967, 41.562235, 42.204722, 42.935591, 43.342879, 43.783583, 44.302609, 44.847562, 45.522751, 46.327434, 47.336891, 48.784399, 49.877339, 51.324594, 53.750662, 56.633316, 58.915196, 63.956736},
    },
    {  // case 5, dim 7
      {74.197579, 80.200818, 84.789881, 87.299668, 90.091448, 94.626017, 98.775704, 101.670824, 103.930643, 105.972095, 107.820645, 109.578695, 111.241757, 112.908986, 114.521925, 116.135293, 117.842872, 119.640734, 121.542815, 123.613972, 125.991387, 127.313236, 128.806094, 130.478959, 132.382258, 133.259161, 134.219383, 135.289035, 136.507252, 137.900880, 138.663128, 139.543424, 140.424122, 141.549633, 142.792627, 144.295568, 146.169604, 148.865601, 150.600697, 152.872782, 156.806229, 161.183417, 164.430683, 172.447492},
      {20.549867, 22.466405, 24.273389, 25.221114, 26.344827, 28.157228, 29.863062, 31.083230, 32.088727, 32.990385, 33.841091, 34.639946, 35.412530, 36.197589, 36.988092, 37.796026, 38.615434, 39.478788, 40.423051, 41.480612, 42.671046, 43.383064, 44.131320, 45.016595, 46.023486, 46.515439, 47.034466, 47.614761, 48.289404, 49.064960, 49.496304, 49.995710, 50.530460, 51.087996, 51.807320, 52.621130, 53.722408, 55.101795, 56.176575, 57.568638, 59.710913, 62.469873, 64.400826, 68.707012},
    },
    {  // case 5, dim 8
      {101.001010, 107.616839, 113.311699, 115.992005, 119.280957, 124.382522, 129.168468, 132.468213, 135.145485, 137.437494, 139.525739, 141.528462, 143.473932, 145.271650, 147.132771, 149.027617, 150.949154, 152.994035, 155.092087, 157.391360, 160.023910, 161.533680, 163.170645, 165.028613, 167.220704, 168.198921, 169.279113, 170.523701, 171.786511, 173.265627, 174.125956, 175.044449, 176.045677, 177.225041, 178.559843, 180.235076, 182.298189, 184.898620, 186.905932, 189.506255, 193.490735, 198.973150, 201.968768, 210.596333},
      {24.766610, 27.145624, 28.942640, 29.987212, 31.159524, 33.134614, 34.971048, 36.272018, 37.346642, 38.308219, 39.190746, 40.029456, 40.838887, 41.663593, 42.471291, 43.318432, 44.183837, 45.095718, 46.080923, 47.167170, 48.439317, 49.161516, 49.952328, 50.882252, 51.960395, 52.456341, 53.002847, 53.590915, 54.274747, 55.043684, 55.491991, 56.002255, 56.569668, 57.170375, 57.937448, 58.726756, 59.795870, 61.333550, 62.359265, 63.869005, 66.068278, 68.747125, 70.611087, 75.292240},
    },
    {  // case 5, dim 9
      {129.997468, 137.931805, 144.765687, 148.253965, 152.053107, 158.041999, 163.465942, 167.176980, 170.136347, 172.736991, 175.059422, 177.313655, 179.411691, 181.485543, 183.579442, 185.656040, 187.792502, 190.021836, 192.412346, 195.049529, 198.047599, 199.740111, 201.506971, 203.569756, 205.981468, 207.045294, 208.222024, 209.538044, 211.047882, 212.705376, 213.609547, 214.564611, 215.686042, 216.921006, 218.448821, 220.133946, 222.335155, 225.456748, 227.477555, 230.411312, 234.684274, 240.596382, 244.327700, 251.782989},
      {29.014836, 31.331452, 33.504228, 34.623601, 35.945150, 38.039201, 40.015524, 41.412228, 42.536399, 43.542556, 44.458659, 45.358947, 46.198892, 47.041059, 47.908507, 48.775537, 49.697650, 50.645344, 51.673006, 52.825090, 54.156672, 54.925000, 55.745100, 56.686085, 57.807436, 58.325164, 58.898525, 59.549256, 60.250831, 61.070728, 61.545572, 62.076874, 62.653359, 63.257693, 64.040749, 64.942948, 66.146359, 67.719321, 68.783087, 70.235473, 72.937694, 76.341042, 78.804001, 83.098117},
    },
    {  // case 5, dim 10
      {164.799421, 173.430374, 180.774377, 184.747078, 188.940520, 195.467623, 201.409457, 205.589730, 208.997208, 211.923036, 214.504558, 216.949616, 219.312344, 221.609683, 223.881540, 226.192781, 228.531716, 230.942214, 233.483384, 236.321420, 239.480248, 241.282955, 243.245922, 245.550374, 248.150899, 249.332533, 250.662810, 252.085570, 253.596116, 255.371660, 256.454154, 257.676331, 258.918416, 260.358685, 262.000745, 263.934175, 266.307004, 269.745733, 271.844108, 274.919579, 279.402858, 285.763988, 290.168282, 299.431887},
      {34.111405, 36.171095, 38.371903, 39.560812, 40.997569, 43.134739, 45.158415, 46.621400, 47.821543, 48.869330, 49.830937, 50.737584, 51.619066, 52.492345, 53.367762, 54.274604, 55.225712, 56.214973, 57.280437, 58.457139, 59.817205, 60.580453, 61.441961, 62.449365, 63.613382, 64.144564, 64.707808, 65.358534, 66.084243, 66.930323, 67.396383, 67.925752, 68.530538, 69.227515, 69.989648, 70.963094, 72.192263, 73.763036, 74.856850, 76.392212, 79.180559, 82.463846, 85.252718, 89.633554},
    },
    {  // case 5, dim 11
      {202.717641, 211.959398, 220.579533, 224.829780, 229.608782, 236.740222, 243.332546, 247.892802, 251.520743, 254.742443, 257.668494, 260.396243, 262.975082, 265.469663, 267.933490, 270.406377, 272.947987, 275.658463, 278.544003, 281.582495, 285.085000, 286.990937, 289.148948, 291.594134, 294.560833, 295.835935, 297.193454, 298.788071, 300.547236, 302.528330, 303.649123, 304.903966, 306.248783, 307.765280, 309.524866, 311.690535, 314.451732, 318.067038, 320.764791, 324.038018, 329.463074, 335.643207, 340.714558, 350.116142},
      {38.344972, 40.946050, 43.318305, 44.514680, 45.881958, 48.144104, 50.247403, 51.750418, 53.012459, 54.109266, 55.136207, 56.079122, 57.021840, 57.938007, 58.854793, 59.816364, 60.801780, 61.813062, 62.938535, 64.168369, 65.576334, 66.355163, 67.237501, 68.259121, 69.411971, 69.969810, 70.566069, 71.228655, 71.994430, 72.879025, 73.379225, 73.924206, 74.473856, 75.173026, 75.987707, 76.920658, 78.155323, 79.780487, 80.808116, 82.512458, 85.144803, 88.529013, 90.566751, 95.902357},
    },
    {  // case 5, dim 12
      {246.127075, 255.059388, 264.304276, 268.901503, 274.057192, 282.024279, 289.249359, 294.248892, 298.207747, 301.664883, 304.783797, 307.729671, 310.482592, 313.216061, 315.938317, 318.630784, 321.476571, 324.379251, 327.527950, 330.943670, 334.665427, 336.823766, 339.270132, 341.792328, 344.782275, 346.138902, 347.603238, 349.263972, 351.120299, 353.170570, 354.316186, 355.627067, 357.081189, 358.737341, 360.725928, 362.952562, 365.816544, 369.689093, 372.319694, 375.941435, 382.980705, 389.898372, 394.854540, 406.248025},
      {42.688774, 45.720239, 48.337070, 49.571895, 51.023664, 53.339428, 55.525457, 57.071390, 58.349214, 59.463350, 60.506884, 61.496059, 62.448710, 63.391942, 64.343691, 65.318071, 66.338376, 67.416506, 68.578186, 69.848351, 71.304113, 72.109813, 73.010194, 73.996569, 75.207520, 75.781936, 76.423646, 77.116700, 77.903054, 78.802761, 79.299873, 79.833999, 80.425644, 81.096366, 81.990191, 83.001688, 84.317856, 85.987121, 87.049140, 88.749860, 91.314652, 94.698933, 96.937584, 101.615971},
    },
  },
};

}  // namespace lopcoint::detail
