# Expansion-precision constants for reciprocal-gamma evaluation.

# Taylor limbs of s -> 1/Gamma(1.5 + s) at s = 0, |s| <= 1/2 (60 terms,
# truncation below 1e-70).
RECIP_GAMMA_TAYLOR_15 = (
    (1.1283791670955126, 1.533545961316588e-17, -4.765684596693686e-34, -2.007794661655263e-50),
    (-0.0411745264452831, -3.3752130157375745e-18, 1.558339790725742e-35, 7.72678097595356e-52),
    (-0.5266544355255445, -6.112036385608127e-18, 5.823895550797599e-35, -2.958404687540324e-51),
    (0.17510202604393457, -1.0657471268514412e-17, -5.445880306668075e-34, -2.7611306480990667e-50),
    (0.050966860247706074, 3.1247224718944427e-18, 1.0334979801046247e-34, -6.29260038311929e-51),
    (-0.042155169368535604, 3.0976342103734477e-18, 1.0107560518419013e-34, -1.0252063231262618e-50),
    (0.006612897826824127, 3.573455638859823e-19, -1.903826761978018e-35, 6.485200202915385e-52),
    (0.002120731442572938, 1.3781297975220145e-19, 8.60652513158487e-37, 2.7612060271214544e-53),
    (-0.0011107302545948906, -9.753454144222531e-20, 1.188018155000789e-36, 5.296270878163919e-53),
    (0.00015235762076747688, -1.0906520861329338e-20, 5.5215531490944455e-37, 1.1205996588246573e-53),
    (2.5355204923814165e-05, 4.893956349690275e-22, 6.072982924517686e-39, -3.8970898073191224e-55),
    (-1.3896805717913756e-05, 2.1533543121307036e-22, 6.414934951962812e-39, -4.875670122108043e-55),
    (2.1562032905141724e-06, 8.714226745633228e-23, 9.791626714780243e-40, -5.595477727594704e-56),
    (5.7942640540526726e-08, -7.454341938541845e-25, -1.6618002344912786e-42, 7.3491224093999106e-59),
    (-8.913551118311116e-08, -3.639776989356635e-24, 3.4696764188822816e-40, 1.0426722914428882e-56),
    (1.7103469415915374e-08, 1.1274857846497739e-25, -4.7360332427292927e-42, 9.615828367013058e-59),
    (-9.313686445241901e-10, -3.474969316158858e-26, 6.459090933967272e-44, -2.9718516959101857e-60),
    (-2.6804741033496623e-10, -2.3612584194639298e-26, 6.896614422683817e-43, 3.9757999769265597e-59),
    (7.458932233316326e-11, 2.4373478754056218e-27, -2.6488160390991488e-46, -2.7189713188818987e-63),
    (-8.012807061414718e-12, -7.570390468804759e-28, -4.131894213591548e-44, -9.539098401442152e-61),
    (-8.382343033451855e-14, 3.885823863175652e-30, -2.3574711283774873e-46, -4.5465738048598453e-63),
    (1.6946340904320522e-13, 2.2653509452158334e-30, 1.0373687955562609e-46, -8.431730004107355e-63),
    (-2.7875756707125753e-14, 6.524116911441165e-31, 1.8358445405232946e-47, -5.304197141431697e-64),
    (1.8670394695065306e-15, -4.254392590878746e-32, 2.365029430064321e-48, 6.8970702895448315e-65),
    (1.3049499008587988e-16, -9.270238560188959e-33, 5.275661511155844e-49, -1.3830203806202846e-66),
    (-4.8588741441877864e-17, -1.339620604759889e-33, -2.3603599549814664e-50, 2.3589972333047957e-66),
    (5.829542692459468e-18, -7.523759917630262e-35, -4.941583394733379e-51, -3.233163152075691e-68),
    (-2.592909417993784e-19, 4.8295929078260184e-36, -1.6232988936146218e-52, -1.565722258360188e-69),
    (-3.326754010285789e-20, 1.6251345689863235e-36, 9.935552322069527e-53, 6.302951183684681e-69),
    (7.944961635768106e-21, -3.661196591132274e-37, -1.3713090401976446e-53, -6.978274889292241e-70),
    (-7.755543288437357e-22, -3.001439691199397e-38, -2.4546830761033344e-54, 1.7844439816997575e-71),
    (2.5533736291329696e-23, 1.0788765942473458e-40, -7.640672300003421e-57, 4.0421830836000986e-73),
    (4.274520160147173e-24, 2.7654689015952895e-40, 2.4551039986696834e-57, 3.4358434222498404e-74),
    (-8.263381374668449e-25, -2.4845851081041036e-41, 7.03906863043757e-58, 4.4293518750551576e-74),
    (7.108187657253398e-26, 7.154417290279865e-43, 2.126181840947327e-59, 2.1194576126172582e-75),
    (-2.0749463887704297e-27, 9.526265424997407e-44, -6.877281154924224e-60, -2.5762361069749483e-76),
    (-3.2859544069948607e-28, 1.8037039593084174e-44, 1.1653644604282968e-60, -6.068746145645749e-77),
    (5.819433908198748e-29, 3.4860696818237906e-46, -1.0677654545942503e-62, -7.046676877440278e-79),
    (-4.7029321304498936e-30, 2.6084244137039753e-46, 1.7052949909029826e-62, 2.1260560380937502e-79),
    (1.4478556515852866e-31, -7.966994137147836e-48, 5.315724831979306e-65, -1.6985659439425982e-81),
    (1.597831505478679e-32, -4.024883214879459e-49, -2.5264783231577287e-65, -1.6757540583867976e-81),
    (-2.8782471747613445e-33, 4.1108877938578373e-50, -1.8033536656274426e-66, 1.0200813880927245e-82),
    (2.3008864006120204e-34, 8.599309638777924e-51, -2.130434954004927e-67, -5.9410578103188205e-84),
    (-8.152469850723197e-36, -4.584698473826406e-52, -1.866769716919725e-68, 1.8989319587869283e-84),
    (-4.842014521389782e-37, 2.2421294070898753e-53, -1.679383293106028e-69, -8.498248305012727e-86),
    (1.0188259041957855e-37, -7.35384261223351e-55, -5.971157871196822e-71, -1.130240949445389e-87),
    (-8.412953049540349e-39, -8.592586028673704e-56, -5.408041339050742e-72, 4.3294023146448446e-88),
    (3.488700583657447e-40, -5.364842298683335e-57, 1.4871319688560137e-73, 1.5412489220584551e-89),
    (7.563108999486958e-42, -3.848715391284926e-58, -2.3874376280628246e-74, -4.2059691915967746e-91),
    (-2.5895319069537333e-42, 9.877813684350853e-59, 1.0558663221044886e-75, -8.113001127573983e-93),
    (2.3070239978497805e-43, -9.089855261465434e-60, 1.5221842928277095e-76, -8.465149317880244e-93),
    (-1.1091964385226436e-44, 2.3917755680618793e-61, 2.690734485712657e-78, 1.7012576360467973e-94),
    (3.979091690485302e-47, -4.023712062927556e-64, -2.4660830107234002e-80, 1.6581213445106641e-96),
    (4.638753025289314e-47, -4.4120847321451276e-63, 1.6265907842917412e-79, 4.653045952629176e-96),
    (-4.7378773552184396e-48, -1.2438450555439832e-64, -3.263864846786013e-81, -2.0340098840880295e-97),
    (2.617289955233379e-49, -1.0105389999539548e-66, 4.066698174030875e-83, 2.30854067846703e-99),
    (-5.415654603129301e-51, -4.600875260938315e-68, 8.505110684888994e-85, -1.3043144546860942e-101),
    (-5.442207402109062e-52, -3.5852421154712807e-68, 7.355924338936107e-86, -2.025231121446276e-102),
    (7.224342931678495e-53, 4.5163385958650615e-70, 2.880550522665099e-86, -6.256014902479669e-103),
    (-4.6052809205915374e-54, 2.5623773813928214e-70, 1.0037937681864915e-86, -4.120100663996834e-103),
)

# Stirling-series limbs B_{2j} / (2j (2j-1)) for j = 1..34; with the
# series started at x >= 40 the optimal tail is below 1e-70.
BERNOULLI_STIRLING = (
    (0.08333333333333333, 4.625929269271485e-18, 2.5679065925163143e-34, 1.425474512049171e-50),
    (-0.002777777777777778, 1.0601087908747154e-19, 3.4773735106991755e-36, 3.2667124234460168e-52),
    (0.0007936507936507937, 6.883823317368282e-22, 5.970764956557651e-40, 5.178813069840099e-58),
    (-0.0005952380952380953, 5.36938218754726e-20, -1.8342189946545105e-36, 1.6545686300570736e-52),
    (0.0008417508417508417, 3.6870174889237694e-20, -6.889900895324708e-37, 3.768418257074434e-53),
    (-0.0019175269175269176, 1.0675702776872475e-19, 6.568342495426554e-37, -2.0311261401341652e-53),
    (0.00641025641025641, 2.2240044563805217e-19, 1.975312763474088e-35, 6.853242846390245e-52),
    (-0.029550653594771242, 4.861760957508855e-19, 1.316681517535326e-35, 2.7181842411133703e-52),
    (0.17964437236883057, -6.401600482710946e-19, 9.779977439678332e-36, -1.6459873421448408e-52),
    (-1.3924322169059011, 1.5837056989230303e-17, 5.2056012685038854e-34, 2.858587930574395e-50),
    (13.402864044168393, -6.154114101993966e-16, 1.3610436598016077e-34, -2.67092015197619e-51),
    (-156.84828462600203, 9.391823141715389e-15, 1.6570392471086158e-31, -4.3781278167020493e-48),
    (2193.1033333333335, -1.3339255626002948e-13, 6.731613057885968e-31, -4.3206702650015194e-47),
    (-36108.77125372499, 5.897583353514365e-13, 7.049709715793733e-31, 3.248966267062169e-47),
    (691472.268851313, 2.5585296305158e-11, -1.2521722821640843e-27, -8.042857178972391e-44),
    (-15238221.539407415, -8.76774522490625e-10, -1.9672353593923997e-26, -1.1987697988365235e-42),
    (382900751.39141417, -2.4082684757733585e-08, -4.344787055834085e-25, 4.2671038618864603e-41),
    (-10882266035.784391, 3.141830930219749e-07, -2.013934646419947e-23, 4.454869877644336e-41),
    (347320283765.00226, -6.048528997747748e-06, 5.341649216919011e-23, 4.871418030434705e-39),
    (-12369602142269.275, 0.0009363732896507286, 3.299942635958079e-20, -2.2283267137789258e-36),
    (488788064793079.3, 0.022575815162518022, 4.800971715392278e-19, 8.204517100444594e-36),
    (-2.1320333960919372e+16, -1.8969750589821368, -3.047406913564973e-17, -2.0306454882458636e-33),
    (1.0217752965257001e+18, -18.434712371946414, -1.7749570310161684e-16, 9.658728380513374e-33),
    (-5.35754721733002e+19, -90.8277091919692, 9.640642309952545e-16, -5.349672583395236e-32),
    (3.0615782637048834e+21, -14332.848948670377, -6.839490150623876e-13, 6.61921135562071e-30),
    (-1.8999917426399204e+23, -1259161.1429306944, 9.979358553254276e-11, 2.6448689505304562e-27),
    (1.2763374033828835e+25, -644253432.6223022, 5.447179031400799e-10, 2.6336122557351365e-26),
    (-9.252847176120416e+26, -53092754794.83476, 2.952902543756531e-07, -8.415011228861297e-24),
    (7.218822595185611e+28, -3236401453454.9834, -0.0002223376015957974, -4.9916930232879055e-21),
    (-6.045183405995857e+30, 226514861971549.44, 0.015213933855604033, 7.108135433655833e-20),
    (5.4206704715700946e+32, -656273188931470.0, 0.001366120218579235, 1.184920407087983e-21),
    (-5.192957815314082e+34, 4.115957613443205e+18, -240.84699706271397, -7.126215100259404e-15),
    (5.303658855119701e+36, -2.605543773787007e+20, 7347.699292635406, -4.327570446750372e-13),
    (-5.763325348164964e+38, -2.137311915777353e+22, -1646815.073756219, -1.760709345044188e-11),
)

LN2 = (0.6931471805599453, 2.3190468138462996e-17, 5.707708438416212e-34, -3.5824322106018114e-50)
LN_SQRT_2PI = (0.9189385332046728, -3.8782941580672414e-17, -1.323971596849807e-33, 5.150860436871684e-50)
