//! High-precision reference values for the modified Bessel function of the
//! second kind, generated with a 40-digit series/continued-fraction
//! evaluator (scripts/gen_bessel_reference.py).

/// (order, argument, K_order(argument))
pub const BESSEL_K_REFERENCE: [(u32, f64, f64); 200] = [
    (0, 1e-08_f64, 18.536612259610778_f64),
    (0, 3.722156537450426e-08_f64, 17.222309044926796_f64),
    (0, 1.3854449289284945e-07_f64, 15.908005830242883_f64),
    (0, 5.156842899488737e-07_f64, 14.593702615559851_f64),
    (0, 1.9194576510936812e-06_f64, 13.279399400887979_f64),
    (0, 7.144521844377584e-06_f64, 11.965096186356287_f64),
    (0, 2.6593028690007402e-05_f64, 10.650792973566679_f64),
    (0, 9.898341558911779e-05_f64, 9.3364897821413618_f64),
    (0, 0.0003684317674342072_f64, 8.0221868483112150_f64),
    (0, 0.0013713607117596493_f64, 6.7078869513748847_f64),
    (0, 0.0051044192384788484_f64, 5.3936217591795465_f64),
    (0, 0.01899944743839177_f64, 4.0797352875242125_f64),
    (0, 0.07071891749075568_f64, 2.7696826643613815_f64),
    (0, 0.26322688105963354_f64, 1.4933430376741698_f64),
    (0, 0.9797716561688007_f64, 0.43341242716927802_f64),
    (0, 3.6468634752173323_f64, 0.016596766134568617_f64),
    (0, 13.574196725469374_f64, 4.2918250365324523e-7_f64),
    (0, 50.525285082344_f64, 2.0062683226190612e-23_f64),
    (0, 188.06302017579318_f64, 1.9314720295416898e-83_f64),
    (0, 700.0_f64, 4.6697764316853769e-306_f64),
    (1, 1.0500000000000003e-08_f64, 95238095.238095111_f64),
    (1, 3.8982411938367815e-08_f64, 25652594.343854660_f64),
    (1, 1.44726518145962e-07_f64, 6909583.7639878267_f64),
    (1, 5.373132141687194e-07_f64, 1861111.8685121737_f64),
    (1, 1.9948347671098538e-06_f64, 501294.65179789043_f64),
    (1, 7.406044822900412e-06_f64, 135024.83762547715_f64),
    (1, 2.749576096384001e-05_f64, 36369.242412044409_f64),
    (1, 0.00010208105528107659_f64, 9796.1364736709705_f64),
    (1, 0.0003789872141019261_f64, 2638.6098337692606_f64),
    (1, 0.0014070319713805409_f64, 710.71085156084379_f64),
    (1, 0.005223761897029522_f64, 191.41758825118810_f64),
    (1, 0.01939379410837662_f64, 51.518678280979349_f64),
    (1, 0.0720016067600598_f64, 13.771591129816178_f64),
    (1, 0.2673139328519066_f64, 3.4790416623159663_f64),
    (1, 0.992432556885544_f64, 0.60971243893580371_f64),
    (1, 3.68451569081523_f64, 0.017946785026756284_f64),
    (1, 13.679172233594203_f64, 3.9878339556906534e-7_f64),
    (1, 50.78544066531924_f64, 1.5578637625557645e-23_f64),
    (1, 188.54656842733434_f64, 1.1925534690314829e-83_f64),
    (1, 700.0_f64, 4.6731107967079661e-306_f64),
    (2, 1.0500000000000003e-08_f64, 18140589569160987.0_f64),
    (2, 3.8982411938367815e-08_f64, 1316111193140763.0_f64),
    (2, 1.44726518145962e-07_f64, 95484695583160.594_f64),
    (2, 5.373132141687194e-07_f64, 6927474774263.3541_f64),
    (2, 1.9948347671098538e-06_f64, 502592655869.31818_f64),
    (2, 7.406044822900412e-06_f64, 36463413575.931230_f64),
    (2, 2.749576096384001e-05_f64, 2645443608.9869201_f64),
    (2, 0.00010208105528107659_f64, 191928598.73292281_f64),
    (2, 0.0003789872141019261_f64, 13924540.197602207_f64),
    (2, 0.0014070319713805409_f64, 1010233.6934159705_f64),
    (2, 0.005223761897029522_f64, 73292.626717605317_f64),
    (2, 0.01939379410837662_f64, 5316.9627075651373_f64),
    (2, 0.0720016067600598_f64, 385.28751781195422_f64),
    (2, 0.2673139328519066_f64, 27.508633827353751_f64),
    (2, 0.992432556885544_f64, 1.6543319589593304_f64),
    (2, 3.68451569081523_f64, 0.025647811578968861_f64),
    (2, 13.679172233594203_f64, 4.4325805270715036e-7_f64),
    (2, 50.78544066531924_f64, 1.6040990230067860e-23_f64),
    (2, 188.54656842733434_f64, 1.2020534540665401e-83_f64),
    (2, 700.0_f64, 4.6831281768188282e-306_f64),
    (3, 1.0500000000000003e-08_f64, 6.9107007882518026e+24_f64),
    (3, 3.8982411938367815e-08_f64, 1.3504666619618802e+23_f64),
    (3, 1.44726518145962e-07_f64, 2.6390380092433656e+21_f64),
    (3, 5.373132141687194e-07_f64, 5.1571222084914798e+19_f64),
    (3, 1.9948347671098538e-06_f64, 1.0077880417088015e+18_f64),
    (3, 7.406044822900412e-06_f64, 19693865996290932.0_f64),
    (3, 2.749576096384001e-05_f64, 384851121264252.08_f64),
    (3, 0.00010208105528107659_f64, 7520635379579.6548_f64),
    (3, 0.0003789872141019261_f64, 146965807071.86752_f64),
    (3, 0.0014070319713805409_f64, 2871957322.8260889_f64),
    (3, 0.005223761897029522_f64, 56122677.979836022_f64),
    (3, 0.01939379410837662_f64, 1096683.2922967542_f64),
    (3, 0.0720016067600598_f64, 21418.156029154778_f64),
    (3, 0.2673139328519066_f64, 415.10941997998767_f64),
    (3, 0.992432556885544_f64, 7.2774983654715548_f64),
    (3, 3.68451569081523_f64, 0.045790674135877236_f64),
    (3, 13.679172233594203_f64, 5.2839885625273693e-7_f64),
    (3, 50.78544066531924_f64, 1.6842069823441245e-23_f64),
    (3, 188.54656842733434_f64, 1.2180549345652841e-83_f64),
    (3, 700.0_f64, 4.6998715291469308e-306_f64),
    (4, 1.0500000000000003e-08_f64, 3.9489718790010290e+33_f64),
    (4, 3.8982411938367815e-08_f64, 2.0785784072524846e+31_f64),
    (4, 1.44726518145962e-07_f64, 1.0940792508730713e+29_f64),
    (4, 5.373132141687194e-07_f64, 5.7587888097673058e+26_f64),
    (4, 1.9948347671098538e-06_f64, 3.0311925328103246e+24_f64),
    (4, 7.406044822900412e-06_f64, 1.5954966355677505e+22_f64),
    (4, 2.749576096384001e-05_f64, 8.3980462686411322e+19_f64),
    (4, 0.00010208105528107659_f64, 4.4203904605828550e+17_f64),
    (4, 0.0003789872141019261_f64, 2326713975821028.4_f64),
    (4, 0.0014070319713805409_f64, 12246875486049.067_f64),
    (4, 0.005223761897029522_f64, 64462442465.789105_f64),
    (4, 0.01939379410837662_f64, 339294252.22774839_f64),
    (4, 0.0720016067600598_f64, 1785191.7933389320_f64),
    (4, 0.2673139328519066_f64, 9344.8550710583811_f64),
    (4, 0.992432556885544_f64, 45.652274075911825_f64),
    (4, 3.68451569081523_f64, 0.10021501874276140_f64),
    (4, 13.679172233594203_f64, 6.7502596112856518e-7_f64),
    (4, 50.78544066531924_f64, 1.8030781351633434e-23_f64),
    (4, 188.54656842733434_f64, 1.2408148575137119e-83_f64),
    (4, 700.0_f64, 4.7234127899258019e-306_f64),
    (5, 1.0500000000000003e-08_f64, 3.0087404792388784e+42_f64),
    (5, 3.8982411938367815e-08_f64, 4.2656742954515386e+39_f64),
    (5, 1.44726518145962e-07_f64, 6.0477057826798695e+36_f64),
    (5, 5.373132141687194e-07_f64, 8.5742001617091041e+33_f64),
    (5, 1.9948347671098538e-06_f64, 1.2156164842473495e+31_f64),
    (5, 7.406044822900412e-06_f64, 1.7234533937856812e+28_f64),
    (5, 2.749576096384001e-05_f64, 2.4434446545611947e+25_f64),
    (5, 0.00010208105528107659_f64, 3.4642200352424716e+22_f64),
    (5, 0.0003789872141019261_f64, 4.9114353122373027e+19_f64),
    (5, 0.0014070319713805409_f64, 69632396364951067.0_f64),
    (5, 0.005223761897029522_f64, 98721925513310.807_f64),
    (5, 0.01939379410837662_f64, 139961024207.20037_f64),
    (5, 0.0720016067600598_f64, 198371635.45470204_f64),
    (5, 0.2673139328519066_f64, 280081.94074030574_f64),
    (5, 0.992432556885544_f64, 375.28053300333537_f64),
    (5, 3.68451569081523_f64, 0.26338240591778311_f64),
    (5, 13.679172233594203_f64, 9.2317476789498815e-7_f64),
    (5, 50.78544066531924_f64, 1.9682376984772455e-23_f64),
    (5, 188.54656842733434_f64, 1.2707025056290628e-83_f64),
    (5, 700.0_f64, 4.7538533896032257e-306_f64),
    (8, 1.0500000000000003e-08_f64, 4.3664260923194569e+69_f64),
    (8, 3.8982411938367815e-08_f64, 1.2097366946269575e+65_f64),
    (8, 1.44726518145962e-07_f64, 3.3516263401347560e+60_f64),
    (8, 5.373132141687194e-07_f64, 9.2858215955406710e+55_f64),
    (8, 1.9948347671098538e-06_f64, 2.5726758878715604e+51_f64),
    (8, 7.406044822900412e-06_f64, 7.1277066395536275e+46_f64),
    (8, 2.749576096384001e-05_f64, 1.9747610718421485e+42_f64),
    (8, 0.00010208105528107659_f64, 5.4711585181892476e+37_f64),
    (8, 0.0003789872141019261_f64, 1.5158074475892636e+33_f64),
    (8, 0.0014070319713805409_f64, 4.1996079455367034e+28_f64),
    (8, 0.005223761897029522_f64, 1.1635179745139929e+24_f64),
    (8, 0.01939379410837662_f64, 3.2235352742850389e+19_f64),
    (8, 0.0720016067600598_f64, 892940646710386.73_f64),
    (8, 0.2673139328519066_f64, 24680823520.158505_f64),
    (8, 0.992432556885544_f64, 661911.90819781659_f64),
    (8, 3.68451569081523_f64, 11.902151734550994_f64),
    (8, 13.679172233594203_f64, 3.5066990102482371e-6_f64),
    (8, 50.78544066531924_f64, 2.8759133644558187e-23_f64),
    (8, 188.54656842733434_f64, 1.4087442438254606e-83_f64),
    (8, 700.0_f64, 4.8880447889914688e-306_f64),
    (16, 1.0500000000000003e-08_f64, 1.9630020853550932e+144_f64),
    (16, 3.8982411938367815e-08_f64, 1.5067813712886347e+135_f64),
    (16, 1.44726518145962e-07_f64, 1.1565907737952111e+126_f64),
    (16, 5.373132141687194e-07_f64, 8.8778786592255498e+116_f64),
    (16, 1.9948347671098538e-06_f64, 6.8145735962686642e+107_f64),
    (16, 7.406044822900412e-06_f64, 5.2308006317104272e+98_f64),
    (16, 2.749576096384001e-05_f64, 4.0151118572389298e+89_f64),
    (16, 0.00010208105528107659_f64, 3.0819609384464116e+80_f64),
    (16, 0.0003789872141019261_f64, 2.3656833344321628e+71_f64),
    (16, 0.0014070319713805409_f64, 1.8158755389011188e+62_f64),
    (16, 0.005223761897029522_f64, 1.3938478725579102e+53_f64),
    (16, 0.01939379410837662_f64, 1.0698978946994104e+44_f64),
    (16, 0.0720016067600598_f64, 8.2117744469386023e+34_f64),
    (16, 0.2673139328519066_f64, 6.2963203865458437e+25_f64),
    (16, 0.992432556885544_f64, 47600176810490001.0_f64),
    (16, 3.68451569081523_f64, 29673948.629174190_f64),
    (16, 13.679172233594203_f64, 0.0016517356712396731_f64),
    (16, 50.78544066531924_f64, 1.8366267742427479e-22_f64),
    (16, 188.54656842733434_f64, 2.3399723130246937e-83_f64),
    (16, 700.0_f64, 5.6059582403027687e-306_f64),
    (32, 4.194271482852841e-08_f64, 2.0986616658127637e+279_f64),
    (32, 1.4477040008474275e-07_f64, 1.2740863028430544e+262_f64),
    (32, 4.996927076938053e-07_f64, 7.7349099835185887e+244_f64),
    (32, 1.724750376984568e-06_f64, 4.6958225922081717e+227_f64),
    (32, 5.953186462611425e-06_f64, 2.8508088477400132e+210_f64),
    (32, 2.0548149767957422e-05_f64, 1.7307108449571655e+193_f64),
    (32, 7.092444719112574e-05_f64, 1.0507053221491700e+176_f64),
    (32, 0.000244804387069971_f64, 6.3787759622675349e+158_f64),
    (32, 0.0008449722247000143_f64, 3.8725208412357246e+141_f64),
    (32, 0.0029165247774355415_f64, 2.3509865985639387e+124_f64),
    (32, 0.010066741283023019_f64, 1.4272703550569633e+107_f64),
    (32, 0.03474658636311195_f64, 8.6648049096970004e+89_f64),
    (32, 0.11993208427093309_f64, 5.2597979011679563e+72_f64),
    (32, 0.41396022870437654_f64, 3.1891554421692637e+55_f64),
    (32, 1.4288342605791895_f64, 1.9071457966052288e+38_f64),
    (32, 4.931795865014931_f64, 9.6800543878771882e+20_f64),
    (32, 17.02269544147059_f64, 749.88002692992566_f64),
    (32, 58.7559112388741_f64, 2.3213367514817132e-23_f64),
    (32, 202.80319984460766_f64, 9.1087134485283906e-89_f64),
    (32, 700.0_f64, 9.6977254763775589e-306_f64),
    (64, 0.002025512967320354_f64, 4.4043807808854736e+278_f64),
    (64, 0.003963130235957581_f64, 9.7201415065824293e+259_f64),
    (64, 0.007754283246055901_f64, 2.1451628118400967e+241_f64),
    (64, 0.015172074870139801_f64, 4.7342121427863909e+222_f64),
    (64, 0.02968576831162458_f64, 1.0448028331560462e+204_f64),
    (64, 0.05808334376109851_f64, 2.3057796119096730e+185_f64),
    (64, 0.11364620201353696_f64, 5.0884920360272431e+166_f64),
    (64, 0.22236080769082409_f64, 1.1228297069712087e+148_f64),
    (64, 0.43507242583457467_f64, 2.4766272064417004e+129_f64),
    (64, 0.8512651923120022_f64, 5.4541336135513657e+110_f64),
    (64, 1.6655903353376866_f64, 1.1939379610172000e+92_f64),
    (64, 3.258903559342906_f64, 2.5541895610611336e+73_f64),
    (64, 6.376389310006797_f64, 5.0044746167426115e+54_f64),
    (64, 12.476079728166892_f64, 7.0176855699820046e+35_f64),
    (64, 24.410768824811758_f64, 28093718591693161.0_f64),
    (64, 47.762249649069446_f64, 1.2927407757408735e-5_f64),
    (64, 93.45189034854685_f64, 4.7238029772463391e-33_f64),
    (64, 182.84850219334206_f64, 2.2937195577270941e-76_f64),
    (64, 357.76242331376756_f64, 8.3751574704604302e-155_f64),
    (64, 700.0_f64, 8.6722607728259479e-305_f64),
];
