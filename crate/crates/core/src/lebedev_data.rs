// Generated from the Lebedev–Laikov tables: one representative per octahedral orbit
// (x >= y >= z >= 0) with its weight normalised so the full rule sums to 1.

pub(crate) const DEGREE_7_POINTS: usize = 26;
pub(crate) static DEGREE_7: &[[f64; 4]] = &[
    [1.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 4.76190476190476233e-02],
    [7.07106781186547573e-01, 7.07106781186547573e-01, 0.00000000000000000e+00, 3.80952380952380987e-02],
    [5.77350269189625731e-01, 5.77350269189625731e-01, 5.77350269189625731e-01, 3.21428571428571397e-02],
];

pub(crate) const DEGREE_11_POINTS: usize = 50;
pub(crate) static DEGREE_11: &[[f64; 4]] = &[
    [1.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.26984126984127001e-02],
    [7.07106781186547573e-01, 7.07106781186547573e-01, 0.00000000000000000e+00, 2.25749559082892397e-02],
    [5.77350269189625731e-01, 5.77350269189625731e-01, 5.77350269189625731e-01, 2.10937500000000014e-02],
    [9.04534033733290888e-01, 3.01511344577763574e-01, 3.01511344577763574e-01, 2.01733355379188697e-02],
];

pub(crate) const DEGREE_17_POINTS: usize = 110;
pub(crate) static DEGREE_17: &[[f64; 4]] = &[
    [1.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 3.82827049493716107e-03],
    [5.77350269189625731e-01, 5.77350269189625731e-01, 5.77350269189625731e-01, 9.79373751248751104e-03],
    [9.65124035086594056e-01, 1.85115635344736212e-01, 1.85115635344736212e-01, 8.21173728319110965e-03],
    [6.90421048382292235e-01, 6.90421048382292235e-01, 2.15957291845848443e-01, 9.94281489117810127e-03],
    [8.28769981252592269e-01, 3.95689473055941876e-01, 3.95689473055941876e-01, 9.59547133607096051e-03],
    [8.78158910604066145e-01, 4.78369028812150210e-01, 0.00000000000000000e+00, 9.69499636166302678e-03],
];

pub(crate) const DEGREE_23_POINTS: usize = 194;
pub(crate) static DEGREE_23: &[[f64; 4]] = &[
    [1.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.78234044724461102e-03],
    [7.07106781186547573e-01, 7.07106781186547573e-01, 0.00000000000000000e+00, 5.71690594997710175e-03],
    [5.77350269189625731e-01, 5.77350269189625731e-01, 5.77350269189625731e-01, 5.57338317884873737e-03],
    [6.71297344269522589e-01, 6.71297344269522589e-01, 3.14196994182586287e-01, 5.60870408258799715e-03],
    [9.12509096867473724e-01, 2.89246562757543901e-01, 2.89246562757543901e-01, 5.15823771180538328e-03],
    [7.77493219314767114e-01, 4.44693317871743710e-01, 4.44693317871743710e-01, 5.51877146727361434e-03],
    [9.82972302707253220e-01, 1.29933544765006709e-01, 1.29933544765006709e-01, 4.10677702816939372e-03],
    [9.38319218137591560e-01, 3.45770219761128317e-01, 0.00000000000000000e+00, 5.05184606461480789e-03],
    [8.36036015482458872e-01, 5.25118572443642018e-01, 1.59041710538353004e-01, 5.53024891623309436e-03],
];

pub(crate) const DEGREE_29_POINTS: usize = 302;
pub(crate) static DEGREE_29: &[[f64; 4]] = &[
    [1.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 8.54591172512814828e-04],
    [5.77350269189625731e-01, 5.77350269189625731e-01, 5.77350269189625731e-01, 3.59911928502557087e-03],
    [8.67643624544083392e-01, 3.51564034557010519e-01, 3.51564034557010519e-01, 3.44978842430588304e-03],
    [6.56632941021961236e-01, 6.56632941021961236e-01, 3.71034178384820945e-01, 3.60482260141988193e-03],
    [7.43452042987555739e-01, 4.72905413258100482e-01, 4.72905413258100482e-01, 3.57672966174336698e-03],
    [9.90705621379408097e-01, 9.61830852261478381e-02, 9.61830852261478381e-02, 2.35210141368916419e-03],
    [9.49454317226443134e-01, 2.21964523629417793e-01, 2.21964523629417793e-01, 3.10895312241367492e-03],
    [7.01176641608954543e-01, 7.01176641608954543e-01, 1.29238672710514424e-01, 3.65004580767725514e-03],
    [9.64408914879205992e-01, 2.64415288706066287e-01, 0.00000000000000000e+00, 2.98234496317180409e-03],
    [8.20326419827759334e-01, 5.71895589187896070e-01, 0.00000000000000000e+00, 3.60082093221646008e-03],
    [8.00072749407395145e-01, 5.44867737258077356e-01, 2.51003475177046520e-01, 3.57154055427338695e-03],
    [9.02442529533000415e-01, 4.12772408316853079e-01, 1.23354853258332703e-01, 3.39231220500616978e-03],
];

pub(crate) const DEGREE_41_POINTS: usize = 590;
pub(crate) static DEGREE_41: &[[f64; 4]] = &[
    [1.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 3.09512129530618775e-04],
    [5.77350269189625731e-01, 5.77350269189625731e-01, 5.77350269189625731e-01, 1.85237969859748924e-03],
    [7.04095493822746943e-01, 7.04095493822746943e-01, 9.21904070768982536e-02, 1.87179063927774437e-03],
    [6.80774406645524355e-01, 6.80774406645524355e-01, 2.70356088359164803e-01, 1.85881258543831723e-03],
    [6.37254693925875193e-01, 6.37254693925875193e-01, 4.33373868777154392e-01, 1.85202882829621344e-03],
    [7.00768575373572955e-01, 5.04441970780035831e-01, 5.04441970780035831e-01, 1.84671595615124246e-03],
    [8.02836877335273758e-01, 4.21576178401096680e-01, 4.21576178401096680e-01, 1.81847177816276914e-03],
    [8.83078727934132557e-01, 3.31792073647212304e-01, 3.31792073647212304e-01, 1.74956465728115431e-03],
    [9.41414158220402530e-01, 2.38473670142188704e-01, 2.38473670142188704e-01, 1.61721064725441131e-03],
    [9.78480583762693867e-01, 1.45903644915776287e-01, 1.45903644915776287e-01, 1.38473723485169195e-03],
    [9.96278129754016417e-01, 6.09503411550719604e-02, 6.09503411550719604e-02, 9.76433116505105226e-04],
    [7.91101929626901956e-01, 6.11684344200987606e-01, 0.00000000000000000e+00, 1.85716119677407812e-03],
    [9.18045287711453994e-01, 3.96475534819985820e-01, 0.00000000000000000e+00, 1.70515399639586452e-03],
    [9.85013335028001924e-01, 1.72478200990772407e-01, 0.00000000000000000e+00, 1.30032168588604816e-03],
    [7.49310611904115853e-01, 5.61026380862206020e-01, 3.51828092773351919e-01, 1.84286647290528619e-03],
    [8.40047488359050409e-01, 4.74239284255198013e-01, 2.63471665593794979e-01, 1.80265893437745123e-03],
    [7.80320742479920337e-01, 5.98412649788538031e-01, 1.81664084036020912e-01, 1.84983056044366024e-03],
    [9.09213475092373602e-01, 3.79103540769556324e-01, 1.72079522565687787e-01, 1.71390450710670931e-03],
    [9.57102074310072548e-01, 2.77867319058624385e-01, 8.21302158193251142e-02, 1.55521360339680816e-03],
    [8.59379855890721189e-01, 5.03356427107511717e-01, 8.99920584207487551e-02, 1.80223912800852519e-03],
];

pub(crate) const DEGREE_59_POINTS: usize = 1202;
pub(crate) static DEGREE_59: &[[f64; 4]] = &[
    [1.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 1.10518923326757203e-04],
    [7.07106781186547573e-01, 7.07106781186547573e-01, 0.00000000000000000e+00, 9.20523273809073961e-04],
    [5.77350269189625731e-01, 5.77350269189625731e-01, 5.77350269189625731e-01, 9.13315978644356247e-04],
    [9.98620681799919252e-01, 3.71263644965708905e-02, 3.71263644965708905e-02, 3.69042189801789880e-04],
    [9.91610739722013856e-01, 9.14006041226222282e-02, 9.14006041226222282e-02, 5.60399092868066047e-04],
    [9.76276606394685054e-01, 1.53107785246990591e-01, 1.53107785246990591e-01, 6.86529762928260890e-04],
    [9.51247067480578523e-01, 2.18092889166061205e-01, 2.18092889166061205e-01, 7.72033855114563129e-04],
    [9.15806886208668347e-01, 2.83987453220017505e-01, 2.83987453220017505e-01, 8.30154595889479518e-04],
    [8.69616915181954053e-01, 3.49117760096376406e-01, 3.49117760096376406e-01, 8.68669255017962666e-04],
    [8.12573722299915646e-01, 4.12143146144430927e-01, 4.12143146144430927e-01, 8.92707628584689036e-04],
    [7.44729469632106511e-01, 4.71899362714912673e-01, 4.71899362714912673e-01, 9.06082023856821794e-04],
    [6.66242253736104351e-01, 5.27314545284233716e-01, 5.27314545284233716e-01, 9.11977725494086695e-04],
    [6.20947533244401884e-01, 6.20947533244401884e-01, 4.78380938076952256e-01, 9.12872013860418141e-04],
    [6.56972271185729095e-01, 6.56972271185729095e-01, 3.69830866459425811e-01, 9.13071493569173488e-04],
    [6.84178830907014257e-01, 6.84178830907014257e-01, 2.52583955700718288e-01, 9.15287378455411629e-04],
    [7.01260433012363071e-01, 7.01260433012363071e-01, 1.28326186659723118e-01, 9.18743627432165436e-04],
    [9.94233354821322357e-01, 1.07238221547816606e-01, 0.00000000000000000e+00, 5.17697731296569430e-04],
    [9.66089643296119016e-01, 2.58206895949696813e-01, 0.00000000000000000e+00, 7.33114368210141727e-04],
    [9.08780131681910519e-01, 4.17275295530671719e-01, 0.00000000000000000e+00, 8.46323283637992821e-04],
    [8.21619237061433472e-01, 5.70036691179250266e-01, 0.00000000000000000e+00, 9.03112269425399169e-04],
    [9.82798601826394669e-01, 1.77177402261532502e-01, 5.21063947701125435e-02, 6.48577845316325734e-04],
    [9.62424923032622837e-01, 2.47571646342628793e-01, 1.11564095715648515e-01, 7.43503091098236877e-04],
    [9.40200799412881150e-01, 3.35461628906648879e-01, 5.90588885323537205e-02, 7.99852789183905385e-04],
    [9.32082204014320181e-01, 3.17361524661197714e-01, 1.74655167757862884e-01, 8.10173149746801842e-04],
    [9.04367419939329897e-01, 4.09026842708535676e-01, 1.21723505109598895e-01, 8.48338957459433048e-04],
    [8.91240756007474655e-01, 3.85429115066922401e-01, 2.39027847938172444e-01, 8.55629925731181168e-04],
    [8.67643562846270755e-01, 4.93222118485128480e-01, 6.26625062415419876e-02, 8.80320867973825925e-04],
    [8.58197998604161905e-01, 4.78532067592243482e-01, 1.85750519454733726e-01, 8.81104818242571964e-04],
    [8.39675362404985637e-01, 4.50742259315706384e-01, 3.02946697352898309e-01, 8.85028234126544375e-04],
    [8.16528856402218839e-01, 5.63212302076209981e-01, 1.26777480068428178e-01, 9.02134229904065260e-04],
    [8.01546937078352895e-01, 5.43430356969390016e-01, 2.49411216236223754e-01, 9.01009167710508600e-04],
    [7.77356306907035055e-01, 5.12351848641987129e-01, 3.64983226059765409e-01, 9.02269293842691529e-04],
    [7.66162121390039363e-01, 6.39427963474910155e-01, 6.42454922422078523e-02, 9.15801617469346537e-04],
    [7.55358414353351049e-01, 6.26980550902439204e-01, 1.90601822277923133e-01, 9.13157800318943548e-04],
    [7.34430575755950277e-01, 6.03116169309630967e-01, 3.11227594714960809e-01, 9.10781357948270464e-04],
    [7.04383718402176506e-01, 5.69370249846844145e-01, 4.23864478152233826e-01, 9.10576025897012580e-04],
];

pub(crate) const DEGREE_131_POINTS: usize = 5810;
pub(crate) static DEGREE_131: &[[f64; 4]] = &[
    [1.00000000000000000e+00, 0.00000000000000000e+00, 0.00000000000000000e+00, 9.73534794617548559e-06],
    [7.07106781186547573e-01, 7.07106781186547573e-01, 0.00000000000000000e+00, 1.90758124180316711e-04],
    [5.77350269189625731e-01, 5.77350269189625731e-01, 5.77350269189625731e-01, 1.90105954673757809e-04],
    [9.99860192316834429e-01, 1.18236166240027699e-02, 1.18236166240027699e-02, 3.92642453891921226e-05],
    [9.99061886766080653e-01, 3.06214500913895814e-02, 3.06214500913895814e-02, 6.66790546729438148e-05],
    [9.97155283346072063e-01, 5.32979403683424280e-02, 5.32979403683424280e-02, 8.86889131501913551e-05],
    [9.93821543112121675e-01, 7.84816553286221963e-02, 7.84816553286221963e-02, 1.06630600095887194e-04],
    [9.88827624636841152e-01, 1.05403815763620096e-01, 1.05403815763620096e-01, 1.21450674333612791e-04],
    [9.82000325316788825e-01, 1.33557779776621088e-01, 1.33557779776621088e-01, 1.33805468164087111e-04],
    [9.73209864847106920e-01, 1.62576995550225201e-01, 1.62576995550225201e-01, 1.44167702362850393e-04],
    [9.62358914160767576e-01, 1.92178719341279197e-01, 1.92178719341279197e-01, 1.52888020082655703e-04],
    [9.49375017882192918e-01, 2.22134053469054793e-01, 2.22134053469054793e-01, 1.60233062377360922e-04],
    [9.34205212626696868e-01, 2.52250491279113198e-01, 2.52250491279113198e-01, 1.66410265344524403e-04],
    [9.16812104058968624e-01, 2.82361086067969724e-01, 2.82361086067969724e-01, 1.71584585401132289e-04],
    [8.97170935512609624e-01, 3.12317396626756005e-01, 3.12317396626756005e-01, 1.75890100013306933e-04],
    [8.75267344802014069e-01, 3.41984703695378922e-01, 3.41984703695378922e-01, 1.79438248525673591e-04],
    [8.51095609128431407e-01, 3.71238645699975778e-01, 3.71238645699975778e-01, 1.82323810675740698e-04],
    [8.24657245919063864e-01, 3.99962764987682795e-01, 3.99962764987682795e-01, 1.84629325295997587e-04],
    [7.95959884622191916e-01, 4.28046645864809283e-01, 4.28046645864809283e-01, 1.86428407932309796e-04],
    [7.65016359866961149e-01, 4.55384436018571093e-01, 4.55384436018571093e-01, 1.87788269462691403e-04],
    [7.31844005948836251e-01, 4.81873609443783379e-01, 4.81873609443783379e-01, 1.88771632185202502e-04],
    [6.96464160731661397e-01, 5.07413870926062938e-01, 5.07413870926062938e-01, 1.89438163817567284e-04],
    [6.58901917408328153e-01, 5.31906130457070692e-01, 5.31906130457070692e-01, 1.89845489953362911e-04],
    [6.19186198353360751e-01, 5.55251497867728649e-01, 5.55251497867728649e-01, 1.90049792957781464e-04],
    [5.98100902524618339e-01, 5.98100902524618339e-01, 5.33432864377958893e-01, 1.90067150192409191e-04],
    [6.17399019222811596e-01, 6.17399019222811596e-01, 4.87480155622175726e-01, 1.89983755553350990e-04],
    [6.35136523941113085e-01, 6.35136523941113085e-01, 4.39548850427344151e-01, 1.89901411315622888e-04],
    [6.51201022822719966e-01, 6.51201022822719966e-01, 3.89710733428381084e-01, 1.89858125770510594e-04],
    [6.65475836394812004e-01, 6.65475836394812004e-01, 3.38058903668060240e-01, 1.89880475609575261e-04],
    [6.77841041485336970e-01, 6.77841041485336970e-01, 2.84715726569761796e-01, 1.89979361042640207e-04],
    [6.88176088748410963e-01, 6.88176088748410963e-01, 2.29841993007975698e-01, 1.90146455484411695e-04],
    [6.96364526709459808e-01, 6.96364526709459808e-01, 1.73645880692345017e-01, 1.90353324625954195e-04],
    [7.02301061715357888e-01, 7.02301061715357888e-01, 1.16389163700759329e-01, 1.90555615846322771e-04],
    [7.05900463662875288e-01, 7.05900463662875288e-01, 5.83872486171024413e-02, 1.90703715566352801e-04],
    [9.99368798526299895e-01, 3.55247031247257483e-02, 0.00000000000000000e+00, 5.99299784424996715e-05],
    [9.95803995094123318e-01, 9.15117662084128369e-02, 0.00000000000000000e+00, 9.74905938245697611e-05],
    [9.87658969704865441e-01, 1.56619793006897989e-01, 0.00000000000000000e+00, 1.24168080459915797e-04],
    [9.74000290331831331e-01, 2.26546759927190700e-01, 0.00000000000000000e+00, 1.43762615429936014e-04],
    [9.54308167446132116e-01, 2.98824231858136113e-01, 0.00000000000000000e+00, 1.58420005479390207e-04],
    [9.28333584759231667e-01, 3.71748241970388582e-01, 0.00000000000000000e+00, 1.69443655098274398e-04],
    [8.96022102987713009e-01, 4.44009449175888915e-01, 0.00000000000000000e+00, 1.77661701401810783e-04],
    [8.57470152021281296e-01, 5.14533709675664253e-01, 0.00000000000000000e+00, 1.83613243444007661e-04],
    [8.12898510366720228e-01, 5.82405367286022990e-01, 0.00000000000000000e+00, 1.87649472707598290e-04],
    [7.62635578761633015e-01, 6.46828396104336956e-01, 0.00000000000000000e+00, 1.89990653533648194e-04],
    [9.97980104501568044e-01, 6.09596425910437292e-02, 1.78782827534293108e-02, 8.14325282076734983e-05],
    [9.95324875845099433e-01, 8.81196227095938783e-02, 3.95388874079209626e-02, 9.99885989088772906e-05],
    [9.91129593860591074e-01, 1.16593672242883098e-01, 6.37812179772298954e-02, 1.15619940306835900e-04],
    [9.85191644636104868e-01, 1.46023285703178490e-01, 8.98589081374503718e-02, 1.28763209263551312e-04],
    [9.77359599689090031e-01, 1.76119711018175501e-01, 1.17260651057616197e-01, 1.39837864336513898e-04],
    [9.67519825278326029e-01, 2.06647119046371813e-01, 1.45610287697099494e-01, 1.49187646841739087e-04],
    [9.55587305522605179e-01, 2.37407602632815212e-01, 1.74615382301177513e-01, 1.57085567917545596e-04],
    [9.41499199515287155e-01, 2.68230547433705113e-01, 2.04038307029558413e-01, 1.63748394810377498e-04],
    [9.25210202890063838e-01, 2.98965331214236907e-01, 2.33678863400369807e-01, 1.69350056663284304e-04],
    [9.06689124932530843e-01, 3.29476275277220898e-01, 2.63363275265421914e-01, 1.74032276939363304e-04],
    [8.85916301200615042e-01, 3.59639088727608580e-01, 2.92936909805160073e-01, 1.77912663727829601e-04],
    [8.62881592075671278e-01, 3.89338304639881227e-01, 3.22259278527551207e-01, 1.81090810883541238e-04],
    [8.37582801935587651e-01, 4.18465378935834686e-01, 3.51200479119574305e-01, 1.83652913260019010e-04],
    [8.10024410549923357e-01, 4.46917231907616619e-01, 3.79638567768453727e-01, 1.85675284177737928e-04],
    [7.80216549201575016e-01, 4.74595081327697621e-01, 4.07457537826387883e-01, 1.87227056660683241e-04],
    [7.48174186227483329e-01, 5.01403460141026214e-01, 4.34545690602782808e-01, 1.88372264559130698e-04],
    [7.13916515256011408e-01, 5.27249340455123949e-01, 4.60794251520513398e-01, 1.89171432452529700e-04],
    [6.77466568405339920e-01, 5.52041305184636566e-01, 4.86096128418172013e-01, 1.89682748045014594e-04],
    [6.38851109552476926e-01, 5.75688723750307663e-01, 5.10344739534278946e-01, 1.89962841705952802e-04],
    [9.92238045805588165e-01, 1.22503943058835205e-01, 2.13645592265579304e-02, 1.12330182900166899e-04],
    [9.87049860798683287e-01, 1.53911321732137202e-01, 4.52092616613718815e-02, 1.25369882671127689e-04],
    [9.80062715442674537e-01, 1.85621309863771206e-01, 7.08646817786481864e-02, 1.36626611767853108e-04],
    [9.71142993665295218e-01, 2.17499872803513100e-01, 9.78523948877291772e-02, 1.46273685610691796e-04],
    [9.60190044389925834e-01, 2.49412833693832992e-01, 1.25810639626721010e-01, 1.54507646668541188e-04],
    [9.47128698820727255e-01, 2.81232156214347995e-01, 1.54452912504700113e-01, 1.61509628081400665e-04],
    [9.31903807923242011e-01, 3.12837227645611116e-01, 1.83543351220275291e-01, 1.67436663974175907e-04],
    [9.14476211262541194e-01, 3.44114516017797301e-01, 2.12881325861958487e-01, 1.72422500243790005e-04],
    [8.94819708014156667e-01, 3.74956771485351004e-01, 2.42291373488082912e-01, 1.76581082298728822e-04],
    [8.72918733841351879e-01, 4.05262173201560993e-01, 2.71616374839145303e-01, 1.80010412601075084e-04],
    [8.48766541998412172e-01, 4.34933545352238493e-01, 3.00712767124028002e-01, 1.82796043733128382e-04],
    [8.22363753013246268e-01, 4.63877664152496483e-01, 3.29447067721647890e-01, 1.85014030071630788e-04],
    [7.93717184497848227e-01, 4.92004641046268676e-01, 3.57693254369915503e-01, 1.86733350739493807e-04],
    [7.62838908516763947e-01, 5.19227355486170383e-01, 3.85330705975776400e-01, 1.88017868863828879e-04],
    [7.29745514031105103e-01, 5.45460908113652221e-01, 4.12242504445269387e-01, 1.88927892565475796e-04],
    [6.94457580541555042e-01, 5.70622066142413953e-01, 4.38313958778102697e-01, 1.89521383250734591e-04],
    [6.56999399855436650e-01, 5.94628675518151795e-01, 4.63431253630055273e-01, 1.89854827739741999e-04],
    [9.81393554925853118e-01, 1.90537079092429507e-01, 2.37131153778197892e-02, 1.34910593593734110e-04],
    [9.73289548667264914e-01, 2.24251871774800909e-01, 4.91787805925480576e-02, 1.44406006836932604e-04],
    [9.63229834953412301e-01, 2.57719080802593592e-01, 7.59549896049514228e-02, 1.52679739093000797e-04],
    [9.51125496836746409e-01, 2.90872453492718674e-01, 1.03699108319110000e-01, 1.59820877140647412e-04],
    [9.36910084134210397e-01, 3.23635402005621908e-01, 1.32134858445023401e-01, 1.65935436861533090e-04],
    [9.20535150904832289e-01, 3.55926735930454319e-01, 1.61031657131478906e-01, 1.71127991094644020e-04],
    [9.01966823390830341e-01, 3.87663712367695590e-01, 1.90191208039570708e-01, 1.75495272560144010e-04],
    [8.81183145070943530e-01, 4.18763670521884179e-01, 2.19438495013795004e-01, 1.79124785080252911e-04],
    [8.58171995308727675e-01, 4.49144901988310696e-01, 2.48615533476385792e-01, 1.82095430087771587e-04],
    [8.32929431925297115e-01, 4.78727093242544477e-01, 2.77576893181233519e-01, 1.84478852454844904e-04],
    [8.05458353236419455e-01, 5.07431515305557412e-01, 3.06186378659112024e-01, 1.86340948170621995e-04],
    [7.75767411552909958e-01, 5.35181050773833600e-01, 3.34314471815255587e-01, 1.87743300879506810e-04],
    [7.43870140758893239e-01, 5.61900102597538087e-01, 3.61836272902842704e-01, 1.88744454370523188e-04],
    [7.09784288755397008e-01, 5.87514403526804618e-01, 3.88629758362040778e-01, 1.89400982937500622e-04],
    [6.73531374655055193e-01, 6.11950730873449533e-01, 4.14574227779203108e-01, 1.89768334503519789e-04],
    [9.64740773745248470e-01, 2.61973387011946279e-01, 2.54004718638935305e-02, 1.51732703746765307e-04],
    [9.53513729919765907e-01, 2.96814974323794889e-01, 5.20810701854398928e-02, 1.58774055748354292e-04],
    [9.40241513347898850e-01, 3.31045150486048823e-01, 7.97182847088559882e-02, 1.64909338227409678e-04],
    [9.24865964671856777e-01, 3.64621556737667607e-01, 1.08046599917792696e-01, 1.70191521619326519e-04],
    [9.07344918357765429e-01, 3.97491678527935988e-01, 1.36841384936662896e-01, 1.74684775314406490e-04],
    [8.87649369026569546e-01, 4.29596740377202913e-01, 1.65907318476355897e-01, 1.78455551200756965e-04],
    [8.65761192577551353e-01, 4.60874285447344711e-01, 1.95070373045461404e-01, 1.81568756211217405e-04],
    [8.41671306163507160e-01, 4.91259885894990311e-01, 2.24172114437672404e-01, 1.84086437066330230e-04],
    [8.15378169396746899e-01, 5.20688275894555797e-01, 2.53065525540648872e-01, 1.86067678539000587e-04],
    [7.86886554600578769e-01, 5.49094091401981954e-01, 2.81611840973106597e-01, 1.87569058374370312e-04],
    [7.56206539679586509e-01, 5.76412330202554224e-01, 3.09678050459323784e-01, 1.88645323634722490e-04],
    [7.23352702516763202e-01, 6.02578600421350585e-01, 3.37134836639498725e-01, 1.89350112332964485e-04],
    [6.88343522248595407e-01, 6.27529196479495566e-01, 3.63854782769439611e-01, 1.89736618451986807e-04],
    [9.41905586465697664e-01, 3.34818947986177118e-01, 2.66484193553744309e-02, 1.64390881515273608e-04],
    [9.27466371135492018e-01, 3.69951554585529474e-01, 5.42400006684349498e-02, 1.69630035090776788e-04],
    [9.10940488354942457e-01, 4.04200307147466908e-01, 8.25199271543085450e-02, 1.74155310384448289e-04],
    [8.92291899838922986e-01, 4.37532010018262418e-01, 1.11269518248371002e-01, 1.78001528238609218e-04],
    [8.71496291356178121e-01, 4.69905449033594713e-01, 1.40296411646781610e-01, 1.81211678707712506e-04],
    [8.48539160717331153e-01, 5.01273987943195221e-01, 1.69427511758429100e-01, 1.83832315808542089e-04],
    [8.23414217903782664e-01, 5.31587488375496631e-01, 1.98503823531268914e-01, 1.85911311983773698e-04],
    [7.96122045278441548e-01, 5.60793710962211644e-01, 2.27376566002089303e-01, 1.87496922022169790e-04],
    [7.66668976047454764e-01, 5.88839322349552052e-01, 2.55904149284976401e-01, 1.88637561268107637e-04],
    [7.35066166016292266e-01, 6.15670597916016304e-01, 2.83949725197689906e-01, 1.89381957580927606e-04],
    [7.01328854597731088e-01, 6.41233880907812304e-01, 3.11379106050069021e-01, 1.89779474825676662e-04],
    [9.12741759473690850e-01, 4.07605125925716683e-01, 2.75779229085846289e-02, 1.73896392658484628e-04],
    [8.95088111730837799e-01, 4.42378812579152014e-01, 5.58413683498429278e-02, 1.77744235987346605e-04],
    [8.75342689173069788e-01, 4.76048091732825807e-01, 8.45777208772714312e-02, 1.81001081506871887e-04],
    [8.53485813181176001e-01, 5.08583872594629671e-01, 1.13597584635924800e-01, 1.83692031824812861e-04],
    [8.29506507335008525e-01, 5.39951363739121781e-01, 1.42728690476505299e-01, 1.85848947321432792e-04],
    [8.03401127819118210e-01, 5.70111843363637960e-01, 1.71811274005763487e-01, 1.87507934249659194e-04],
    [7.75172179135182993e-01, 5.99024053060602135e-01, 2.00694485598535088e-01, 1.88708023910230996e-04],
    [7.44827299293698064e-01, 6.26645268513969511e-01, 2.29233509059890705e-01, 1.89490575217682219e-04],
    [7.12378409506820298e-01, 6.52932097141594170e-01, 2.57287151235371381e-01, 1.89899106120069511e-04],
    [8.77273368293818412e-01, 4.79158383461012582e-01, 2.82609419773593197e-02, 1.80906501645879098e-04],
    [8.56471702797548695e-01, 5.13037395279694053e-01, 5.69987135968364894e-02, 1.83629712159679928e-04],
    [8.33602080105873333e-01, 5.45625242962847645e-01, 8.60271252855439456e-02, 1.85842691624186904e-04],
    [8.08657029244319703e-01, 5.76895632968238536e-01, 1.15174813722128094e-01, 1.87565410113464101e-04],
    [7.81635476004463037e-01, 6.06818694469904552e-01, 1.44281165413636198e-01, 1.88824075183350275e-04],
    [7.52541704427905134e-01, 6.35362224802490716e-01, 1.73193032165768007e-01, 1.89649738386697908e-04],
    [7.21384443090222871e-01, 6.62492703573179686e-01, 2.01761995875606087e-01, 1.90077553021912094e-04],
    [8.35660774599680689e-01, 5.48493350802848778e-01, 2.87421975590739093e-02, 1.85852504147881396e-04],
    [8.11834944926530633e-01, 5.81020768214210559e-01, 5.77831212371369488e-02, 1.87624869007794738e-04],
    [7.85988750536652847e-01, 6.12095519718135250e-01, 8.69526237143952579e-02, 1.88940443906460706e-04],
    [7.58123681953481010e-01, 6.41694428429431918e-01, 1.16089376705716604e-01, 1.89816853926529002e-04],
    [7.28245723021321512e-01, 6.69792639173126036e-01, 1.45037882674325103e-01, 1.90277994066177200e-04],
    [7.88179519024478692e-01, 6.14759439058548796e-01, 2.90495762234145617e-02, 1.89012564173181492e-04],
    [7.61503592093644044e-01, 6.45539002635678316e-01, 5.82380915261719728e-02, 1.89943463779575108e-04],
    [7.32874875130448133e-01, 6.74725858836547676e-01, 8.74038489988471501e-02, 1.90452085683175099e-04],
    [7.35206886011393723e-01, 6.77213575039534721e-01, 2.91994613580810504e-02, 1.90553449873456294e-04],
];
