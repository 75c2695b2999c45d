// Generated by tools/gen_entropy_tables.py on 2026-08-09.
// Do not edit by hand; regenerate with the script.
#pragma once

namespace icatext::detail {

// One knot of a tabulated maximum-entropy bound. `stat` is the
// measuring-function statistic (table coordinate), `h` the entropy of
// the constrained maximum-entropy density, `slope` = dh/dstat, and
// (mult_lin, mult_quad) the linear/quadratic Lagrange multipliers of
// the solved density exp(-mult_lin*z - mult_quad*z^2 - c*G(z)).
struct BoundKnot {
    double stat;
    double h;
    double slope;
    double mult_lin;
    double mult_quad;
};

inline constexpr double kGaussianEntropy = 1.4189385332046727;

// stat = E[z^4]; density exp(-a z^2 - b z^4), b = -slope
inline constexpr BoundKnot kQuarticBound[] = {
    {1.02, -0.53191080741864738, -25.266915725028305, 0, -51.044508079057742},
    {1.044746835443038, -0.12231652504577184, -11.471460757324841, 0, -23.469544648248259},
    {1.0694936708860758, 0.10570176469127812, -7.5373569667386127, 0, -15.622311142272032},
    {1.0942405063291138, 0.26691639917327059, -5.6781717498369808, 0, -11.926571061136446},
    {1.1189873417721519, 0.39277718889927193, -4.5745151464795617, 0, -9.7376490873114268},
    {1.1437341772151899, 0.49620972647599082, -3.8271850090523123, 0, -8.2545645947575217},
    {1.1684810126582279, 0.58381738440324105, -3.2785402395205687, 0, -7.1618240382314866},
    {1.1932278481012659, 0.65949219561706407, -2.854048156153147, 0, -6.3110594794880122},
    {1.2179746835443037, 0.72576352440803227, -2.5135700871986595, 0, -5.6229294630444295},
    {1.2427215189873417, 0.78439248407529805, -2.2333099083015702, 0, -5.0507645632280171},
    {1.2674683544303798, 0.8366685312344373, -1.9980988962975783, 0, -4.5650542401589007},
    {1.2922151898734178, 0.88357218010441629, -1.7977107534136392, 0, -4.1460582851197811},
    {1.3169620253164558, 0.92587112764666868, -1.6249398971211442, 0, -3.7799682758603512},
    {1.3417088607594936, 0.96418048887243302, -1.4745258735625069, 0, -3.4567688599558957},
    {1.3664556962025316, 0.99900239069021257, -1.3425155007841532, 0, -3.1689759065734},
    {1.3912025316455696, 1.0307530431189245, -1.2258659827248737, 0, -2.9108557172500573},
    {1.4159493670886076, 1.0597818672479824, -1.1221877690684625, 0, -2.6779221227341314},
    {1.4406962025316457, 1.0863853913679336, -1.0295721199480319, 0, -2.4666012868831713},
    {1.4654430379746834, 1.1108175884634151, -0.94647199799138448, 0, -2.2740016001889254},
    {1.4901898734177215, 1.1332977250082268, -0.87161765525682156, 0, -2.0977516067116282},
    {1.5149367088607595, 1.1540164267570634, -0.80395545051074391, 0, -1.935883248534831},
    {1.5396835443037975, 1.1731404397858718, -0.74260261901834002, 0, -1.7867460649188804},
    {1.5644303797468355, 1.190816418749709, -0.68681324540152033, 0, -1.6489430126373141},
    {1.5891772151898733, 1.20717397774212, -0.63595226292630036, 0, -1.5212816923818322},
    {1.6139240506329113, 1.2223281738581986, -0.58947530720787611, 0, -1.4027367511140301},
    {1.6386708860759494, 1.2363815485022069, -0.54691290947250604, 0, -1.2924205239433737},
    {1.6634177215189874, 1.2494258197815662, -0.50785795371186082, 0, -1.189559840437358},
    {1.6881645569620254, 1.2615432966435625, -0.47195562137679592, 0, -1.0934775049345922},
    {1.7129113924050634, 1.2728080689205188, -0.43889525489499509, 0, -1.0035773643643227},
    {1.7376582278481012, 1.2832870152897091, -0.40840371769959549, 0, -0.91933216068891077},
    {1.7624050632911392, 1.2930406620704207, -0.38023993323430411, 0, -0.8402735671952446},
    {1.7871518987341772, 1.3021239189124509, -0.35419036142638416, 0, -0.76598395387301366},
    {1.8118987341772153, 1.3105867121797488, -0.33006522698626373, 0, -0.69608953394465312},
    {1.8366455696202533, 1.3184745327777168, -0.30769535543142329, 0, -0.63025462269170562},
    {1.8613924050632911, 1.3258289120109703, -0.28692950395573613, 0, -0.56817679890356954},
    {1.8861392405063291, 1.3326878365715142, -0.26763209797431697, 0, -0.50958280401678768},
    {1.9108860759493671, 1.3390861117852673, -0.24968130234736671, 0, -0.45422504816097403},
    {1.9356329113924051, 1.3450556806691543, -0.23296737034032411, 0, -0.40187861862254837},
    {1.9603797468354431, 1.3506259050829206, -0.21739122433568273, 0, -0.35233870665486555},
    {1.9851265822784812, 1.3558238142326333, -0.20286323092221339, 0, -0.30541838454116743},
    {2.009873417721519, 1.3606743249454634, -0.18930213980239438, 0, -0.26094667741327038},
    {2.0346202531645572, 1.3652004374488276, -0.17663416138969826, 0, -0.21876688432843447},
    {2.059367088607595, 1.3694234098209532, -0.16479216232308769, 0, -0.17873511109729467},
    {2.0841139240506328, 1.3733629138109, -0.15371496164065201, 0, -0.1407189837803835},
    {2.108860759493671, 1.377037174335483, -0.14334671320646186, 0, -0.1045965169670013},
    {2.1336075949367088, 1.3804630946338072, -0.13363636231175532, 0, -0.070255115176149824},
    {2.1583544303797471, 1.3836563687855887, -0.12453716627997143, 0, -0.037590689174631153},
    {2.1831012658227849, 1.3866315830678193, -0.11600627047778296, 0, -0.0065068718468567228},
    {2.2078481012658226, 1.3894023074281949, -0.10800433243617714, 0, 0.023085679404607234},
    {2.2325949367088609, 1.3919811781869491, -0.10049518786817598, 0, 0.051269904803809163},
    {2.2573417721518987, 1.3943799729365101, -0.093445553273621793, 0, 0.078122898347215849},
    {2.2820886075949369, 1.3966096784866413, -0.086824760579115506, 0, 0.1037164060504851},
    {2.3068354430379747, 1.3986805525981914, -0.080604519898729993, 0, 0.12811727325709987},
    {2.3315822784810125, 1.4006021801585655, -0.074758707039500952, 0, 0.15138784700909166},
    {2.3563291139240508, 1.4023835243742759, -0.069263172831966896, 0, 0.17358633866656611},
    {2.3810759493670886, 1.4040329734886128, -0.06409557175398109, 0, 0.19476715127132616},
    {2.4058227848101268, 1.4055583834740171, -0.059235207646970219, 0, 0.21498117555991994},
    {2.4305696202531646, 1.4069671170978766, -0.05466289460705559, 0, 0.23427605802598031},
    {2.4553164556962024, 1.4082660797160842, -0.050360831376604659, 0, 0.25269644399696195},
    {2.4800632911392406, 1.4094617521099353, -0.046312487771201484, 0, 0.27028419831461642},
    {2.5048101265822784, 1.4105602206479557, -0.042502501857972948, 0, 0.28707860588213446},
    {2.5295569620253167, 1.411567205024481, -0.038916586758099884, 0, 0.30311655405557236},
    {2.5543037974683545, 1.4124880838006344, -0.035541446082908608, 0, 0.31843269860581958},
    {2.5790506329113922, 1.413327917950346, -0.032364697132325412, 0, 0.33305961475378126},
    {2.6037974683544305, 1.4140914725938201, -0.02937480108943092, 0, 0.34702793457984971},
    {2.6285443037974683, 1.414783237083076, -0.026560999537752858, 0, 0.36036647192374516},
    {2.6532911392405065, 1.4154074435885571, -0.023913256710951677, 0, 0.37310233571689672},
    {2.6780379746835443, 1.4159680843221452, -0.021422206959716583, 0, 0.38526103252069777},
    {2.7027848101265821, 1.4164689275200397, -0.019079106990017764, 0, 0.39686655887320021},
    {2.7275316455696204, 1.4169135322987314, -0.016875792492546851, 0, 0.40794148386502443},
    {2.7522784810126582, 1.4173052624887079, -0.014804638847762369, 0, 0.41850702216027919},
    {2.7770253164556964, 1.4176472995435239, -0.012858525657782002, 0, 0.4285830974320885},
    {2.8017721518987342, 1.4179426546166116, -0.011030804930060398, 0, 0.43818839586785896},
    {2.8265189873417724, 1.4181941798949163, -0.0093152728254732482, 0, 0.4473404089730621},
    {2.8512658227848102, 1.4184045792776163, -0.0077061449965474572, 0, 0.45605546429184018},
    {2.876012658227848, 1.4185764184906544, -0.00619803569978846, 0, 0.46434874174252072},
    {2.9007594936708863, 1.4187121347350979, -0.0047859411049553744, 0, 0.47223427180730193},
    {2.9255063291139241, 1.4188140459821981, -0.0034652276120411265, 0, 0.47972490937830681},
    {2.9502531645569623, 1.4188843600556373, -0.0022316266639715843, 0, 0.48683227274501634},
    {2.9750000000000001, 1.418925183692354, -0.0010812388223472272, 0, 0.49356662900701526},
    {3, 1.4189385332046727, 0, 0, 0.5},
};

// stat = ln(E[z^10]); density exp(-a z^2 - b z^10), b = -slope/E[z^10]
inline constexpr BoundKnot kDecupleBound[] = {
    {0.058268908123975824, -1.1375328827260844, -8.860804235674502, 0, -43.804021178372508},
    {0.1268306350647847, -0.72923173889045145, -4.2287542030932155, 0, -20.643771015466132},
    {0.19539236200559343, -0.49323133390275764, -2.8540502096535603, 0, -13.7702510482678},
    {0.26395408894640221, -0.32226411083546846, -2.1996189257559609, 0, -10.498094628779802},
    {0.33251581588721196, -0.18557622410414876, -1.8169891724981551, 0, -8.5849458624907768},
    {0.40107754282802066, -0.070227710994901216, -1.5629819074734201, 0, -7.314909537368516},
    {0.46963926976882936, 0.030325279991592069, -1.3790303853352839, 0, -6.3951519266767036},
    {0.53820099670963806, 0.11982841599389182, -1.2374293137965358, 0, -5.6871465689827616},
    {0.60676272365044692, 0.20063527418850846, -1.1235624294070226, 0, -5.1178121470351465},
    {0.67532445059125568, 0.2743344249813493, -1.0290171798024035, 0, -4.6450858990120327},
    {0.74388617753206432, 0.342059236978423, -0.94860027885603337, 0, -4.2430013942801761},
    {0.81244790447287318, 0.40465433042757626, -0.87891884919096186, 0, -3.8945942459548144},
    {0.88100963141368183, 0.46277141739600092, -0.8176512613378194, 0, -3.5882563066891002},
    {0.94957135835449069, 0.5169277371783596, -0.76314699726849189, 0, -3.3157349863424623},
    {1.0181330852952994, 0.56754342776722133, -0.71419455161998724, 0, -3.0709727580999377},
    {1.0866948122361082, 0.61496640573221351, -0.66988031020647509, 0, -2.8494015510323774},
    {1.1552565391769178, 0.6594895047726661, -0.62949921644911966, 0, -2.6474960822455995},
    {1.2238182661177266, 0.70136263218615369, -0.59249622143494607, 0, -2.4624811071747308},
    {1.2923799930585353, 0.74080161262430999, -0.55842673351967753, 0, -2.2921336675983879},
    {1.3609417199993441, 0.77799476559102243, -0.52692918652049858, 0, -2.1346459326024938},
    {1.4295034469401529, 0.81310789337795875, -0.49770556471034011, 0, -1.9885278235517014},
    {1.4980651738809616, 0.84628812919895613, -0.4705072878531571, 0, -1.8525364392657859},
    {1.5666269008217704, 0.87766695182758059, -0.44512479050594905, 0, -1.7256239525297459},
    {1.6351886277625791, 0.9073625799312659, -0.42137970020485871, 0, -1.6068985010242938},
    {1.7037503547033879, 0.93548189741612875, -0.39911887799539753, 0, -1.4955943899769883},
    {1.7723120816441966, 0.96212201908778705, -0.37820981597901099, 0, -1.3910490798950554},
    {1.8408738085850054, 0.98737157685945853, -0.35853703878454357, 0, -1.2926851939227177},
    {1.9094355355258141, 1.0113117862610153, -0.33999925810347936, 0, -1.1999962905173971},
    {1.9779972624666229, 1.0340173383472593, -0.322507099324014, 0, -1.1125354966200705},
    {2.0465589894074325, 1.0555571514604314, -0.30598126788245039, 0, -1.0299063394122523},
    {2.1151207163482413, 1.075995009467666, -0.29035105723582427, 0, -0.95175528617912153},
    {2.18368244328905, 1.0953901072554761, -0.27555312489583006, 0, -0.87776562447915052},
    {2.2522441702298588, 1.1137975198617016, -0.26153048075210727, 0, -0.80765240376053671},
    {2.3208058971706675, 1.1312686082715828, -0.2482316449645362, 0, -0.74115822482268112},
    {2.3893676241114763, 1.1478513723238066, -0.23560994238814315, 0, -0.67804971194071584},
    {2.457929351052285, 1.1635907591679326, -0.22362290775473645, 0, -0.61811453877368228},
    {2.5264910779930938, 1.1785289341444081, -0.21223178133218612, 0, -0.56115890666093071},
    {2.5950528049339026, 1.1927055197183063, -0.20140107898192233, 0, -0.50700539490961183},
    {2.6636145318747113, 1.2061578071111598, -0.19109822377142219, 0, -0.45549111885711097},
    {2.7321762588155201, 1.2189209444844806, -0.18129322881234058, 0, -0.40646614406170301},
    {2.8007379857563288, 1.2310281048904832, -0.17195842296264113, 0, -0.35979211481320567},
    {2.869299712697138, 1.2425106366875227, -0.16306821258225215, 0, -0.31534106291126085},
    {2.9378614396379468, 1.2533981986946143, -0.15459887376293593, 0, -0.27299436881467976},
    {3.0064231665787555, 1.2637188820118217, -0.14652837043645436, 0, -0.23264185218227179},
    {3.0749848935195643, 1.273499320146283, -0.13883619455541069, 0, -0.19418097277705346},
    {3.1435466204603735, 1.2827647888453586, -0.13150322517990742, 0, -0.15751612589953704},
    {3.2121083474011822, 1.2915392968396922, -0.12451160382227668, 0, -0.1225580191113833},
    {3.280670074341991, 1.2998456685324393, -0.11784462382622479, 0, -0.089223119131124143},
    {3.3492318012827997, 1.3077056195307952, -0.11148663190490336, 0, -0.057433159524516872},
    {3.4177935282236085, 1.3151398257975231, -0.10542294024960956, 0, -0.027114701248047723},
    {3.4863552551644172, 1.322167987099695, -0.099639747858801614, 0, 0.0018012607059919468},
    {3.554916982105226, 1.3288088853462716, -0.0941240699351506, 0, 0.029379650324246873},
    {3.6234787090460352, 1.3350804383329911, -0.088863674363844555, 0, 0.055681628180777161},
    {3.6920404359868439, 1.3409997493502754, -0.08384702442419778, 0, 0.08076487787901114},
    {3.7606021629276527, 1.3465831530558412, -0.079063227003543679, 0, 0.10468386498228167},
    {3.8291638898684615, 1.3518462579670794, -0.074501985681210331, 0, 0.12749007159394832},
    {3.8977256168092702, 1.3568039858878582, -0.070153558134206859, 0, 0.14923220932896575},
    {3.966287343750079, 1.3614706085493264, -0.066008717387577853, 0, 0.16995641306211068},
    {4.0348490706908882, 1.3658597817137281, -0.062058716493303447, 0, 0.1897064175334828},
    {4.1034107976316969, 1.3699845769635448, -0.058295256273787101, 0, 0.20852371863106436},
    {4.1719725245725057, 1.3738575113748939, -0.054710455810802174, 0, 0.22644772094598908},
    {4.2405342515133144, 1.3774905752536084, -0.05129682539939559, 0, 0.24351587300302197},
    {4.3090959784541232, 1.3808952580943377, -0.04804724171962467, 0, 0.25976379140187661},
    {4.3776577053949319, 1.3840825729071051, -0.044954925007944346, 0, 0.27522537496027821},
    {4.4462194323357416, 1.3870630790416607, -0.042013418035207376, 0, 0.28993290982396314},
    {4.5147811592765503, 1.3898469036275225, -0.039216566720167045, 0, 0.30391716639916483},
    {4.5833428862173591, 1.3924437617365166, -0.03655850222654225, 0, 0.31720748886728872},
    {4.6519046131581678, 1.3948629753648161, -0.034033624408516663, 0, 0.32983187795741659},
    {4.7204663400989766, 1.397113491322723, -0.031636586484340347, 0, 0.34181706757829827},
    {4.7890280670397853, 1.3992038981126504, -0.029362280830771827, 0, 0.35318859584614082},
    {4.8575897939805941, 1.4011424418688023, -0.027205825802691413, 0, 0.36397087098654279},
    {4.9261515209214028, 1.4029370414258655, -0.025162553492557534, 0, 0.37418723253721226},
    {4.9947132478622116, 1.4045953025784876, -0.023227998353654529, 0, 0.38386000823172733},
    {5.0632749748030204, 1.4061245315884039, -0.021397886619476801, 0, 0.39301056690261599},
    {5.1318367017438291, 1.4075317479916936, -0.019668126459271316, 0, 0.40165936770364336},
    {5.2003984286846379, 1.4088236967547929, -0.018034798816879756, 0, 0.40982600591560125},
    {5.2689601556254466, 1.4100068598244886, -0.016494148886749212, 0, 0.41752925556625392},
    {5.3375218825662554, 1.4110874671141858, -0.015042578187488397, 0, 0.42478710906255807},
    {5.4060836095070641, 1.4120715069662433, -0.013676637199844138, 0, 0.43161681400077928},
    {5.4746453364478729, 1.4129647361281314, -0.01239301854270509, 0, 0.43803490728647443},
    {5.5432070633886816, 1.4137726892786007, -0.01118855066803027, 0, 0.44405724665984864},
    {5.6117687903294904, 1.4145006881390179, -0.010060192063886949, 0, 0.44969903968056524},
    {5.6803305172703, 1.4151538502046117, -0.0090050259646807587, 0, 0.45497487017659632},
    {5.7488922442111088, 1.4157370971307177, -0.008020255580080668, 0, 0.4598987220995967},
    {5.8174539711519175, 1.4162551628104301, -0.0071031998704408437, 0, 0.46448400064779577},
    {5.8860156980927263, 1.4167126011826932, -0.0062512899188278594, 0, 0.46874355040586063},
    {5.954577425033535, 1.417113793814333, -0.0054620659814559932, 0, 0.47268967009272},
    {6.0231391519743438, 1.4174629573066144, -0.0047331753449992497, 0, 0.47633412327500368},
    {6.0917008789151526, 1.417764150587987, -0.0040623711903665866, 0, 0.47968814404816701},
    {6.1602626058559613, 1.4180212821719169, -0.0034475127748185555, 0, 0.48276243612590714},
    {6.2288243327967701, 1.4182381174858463, -0.0028865674284718232, 0, 0.48556716285764079},
    {6.2973860597375788, 1.4184182864211523, -0.0023776151764104648, 0, 0.48811192411794757},
    {6.3659477866783876, 1.4185652913270315, -0.0019188573642043569, 0, 0.49040571317897813},
    {6.4345095136191972, 1.418682515798606, -0.0015086317448762265, 0, 0.49245684127561867},
    {6.503071240560006, 1.4187732348444946, -0.0011454386997237402, 0, 0.494272806501381},
    {6.5716329675008147, 1.4188406274859648, -0.00082798824435372041, 0, 0.49586005877823097},
    {6.6401946944416235, 1.4188877938644433, -0.00055529013815721479, 0, 0.49722354930921292},
    {6.7087564213824322, 1.4189177815228928, -0.00032684786178655641, 0, 0.49836576069106253},
    {6.777318148323241, 1.4189336336757254, -0.0001431722764408097, 0, 0.49928413861779603},
    {6.8458798752640497, 1.4189385121521974, -8.0138784723295334e-06, 0, 0.49995993060763838},
    {6.8511849274937431, 1.4189385332046727, 0, 0, 0.5},
};

// stat = |E[z exp(-z^2/2)]|; density exp(-l z - a z^2 - c z exp(-z^2/2)), c = -slope
inline constexpr BoundKnot kOddGaussBound[] = {
    {0, 1.4189385332046727, 0, 0, 0.5},
    {0.00134897707492129, 1.4189250435587426, -0.02, -0.0070711416151838982, 0.50001249989442742},
    {0.0036121064309513643, 1.4188418085750485, -0.053559322033898307, -0.018937497058872928, 0.50008963835111842},
    {0.0058741184822417181, 1.4186827050494153, -0.087118644067796611, -0.030807188840363847, 0.50023713881391996},
    {0.0081343154924587834, 1.4184478804598681, -0.12067796610169491, -0.042682301601812696, 0.50045495920519822},
    {0.010392003074448576, 1.4181375520671622, -0.1542372881355932, -0.054564911635962283, 0.50074303740518378},
    {0.012646491460877211, 1.4177520062479407, -0.18779661016949151, -0.066457083710095538, 0.5011012912910523},
    {0.014897096756115688, 1.4172915976185387, -0.22135593220338981, -0.078360867928776182, 0.50152961878929292},
    {0.017143142164358121, 1.4167567479543934, -0.25491525423728811, -0.090278296645851672, 0.50202789794189595},
    {0.019383959189113571, 1.4161479449111756, -0.28847457627118644, -0.10221138143595547, 0.50259598698700203},
    {0.021618888799388676, 1.4154657405548292, -0.32203389830508478, -0.11416211013547446, 0.50323372445474723},
    {0.023847282558088764, 1.414710749708743, -0.35559322033898305, -0.12613244396261178, 0.50394092927911405},
    {0.026068503708398402, 1.4138836481272374, -0.38915254237288133, -0.13812431472580569, 0.50471740092666106},
    {0.028281928214163369, 1.412985170505447, -0.42271186440677966, -0.15013962212933957, 0.50556291954303667},
    {0.03048694575058325, 1.4120161083364753, -0.45627118644067799, -0.16218023118450953, 0.50647724611820444},
    {0.032682960641825978, 1.4109773076274321, -0.48983050847457626, -0.17424796973420958, 0.50746012267130391},
    {0.034869392742504217, 1.4098696664865953, -0.52338983050847454, -0.18634462609823646, 0.50851127245604322},
    {0.037045678260292682, 1.4086941325944571, -0.55694915254237287, -0.19847194684603098, 0.50963040018747463},
    {0.039211270517323212, 1.4074517005718765, -0.5905084745762712, -0.2106316347029388, 0.51081719229093303},
    {0.041365640648357731, 1.4061434092588665, -0.62406779661016953, -0.22282534659542369, 0.51207131717383536},
    {0.043508278234117771, 1.4047703389177906, -0.65762711864406775, -0.23505469183996958, 0.51339242552092201},
    {0.045638691868524255, 1.4033336083748638, -0.69118644067796609, -0.24732123047970131, 0.51478015061340487},
    {0.047756409658986122, 1.4018343721138733, -0.72474576271186442, -0.25962647177201925, 0.5162341086723421},
    {0.049860979659253749, 1.4002738173359561, -0.75830508474576264, -0.27197187282980179, 0.5177538992264108},
    {0.051951970234730312, 1.3986531609990993, -0.79186440677966097, -0.28435883741796614, 0.51933910550407691},
    {0.054028970360501409, 1.3969736468507463, -0.8254237288135593, -0.29678871490642572, 0.52098929485000101},
    {0.056091589852702108, 1.3952365424665363, -0.85898305084745763, -0.30926279937972306, 0.52270401916533338},
    {0.058139459534183882, 1.3934431363077531, -0.89254237288135596, -0.32178232890286645, 0.52448281537137353},
    {0.060172231335774241, 1.3915947348095448, -0.92610169491525418, -0.33434848494216324, 0.52632520589589316},
    {0.062189578334731474, 1.3896926595113577, -0.95966101694915251, -0.34696239193912853, 0.52823069918124088},
    {0.064191194732287044, 1.3877382442403956, -0.99322033898305084, -0.35962511703485495, 0.53019879021317784},
    {0.066176795772436028, 1.3857328323581752, -1.0267796610169491, -0.37233766994156964, 0.53222896106923256},
    {0.068146117604380829, 1.3836777740795063, -1.0603389830508474, -0.38510100295747723, 0.53432068148520284},
    {0.070098917091247867, 1.3815744238724146, -1.0938983050847457, -0.39791601112040664, 0.53647340943830235},
    {0.072034971567892569, 1.3794241379466987, -1.1274576271186441, -0.4107835324952353, 0.53868659174531541},
    {0.073954078550770602, 1.3772282718379669, -1.1610169491525424, -0.42370434858957201, 0.54095966467401224},
    {0.075856055402987871, 1.374988178093139, -1.1945762711864407, -0.43667918489173857, 0.54329205456598961},
    {0.077740738957753949, 1.3727052040625283, -1.2281355932203391, -0.44970871152470293, 0.5456831784690177},
    {0.079607985103543735, 1.3703806898027693, -1.2616949152542372, -0.46279354400927675, 0.54813244477691925},
    {0.081457668334322789, 1.368015966094007, -1.2952542372881355, -0.47593424412962287, 0.55063925387496837},
    {0.083289681268227417, 1.3656123525739416, -1.3288135593220338, -0.48913132089388228, 0.55320299878876855},
    {0.085103934138083662, 1.3631711559905133, -1.3623728813559322, -0.50238523158258352, 0.55582306583457886},
    {0.086900354257136603, 1.3606936685742625, -1.3959322033898305, -0.51569638287736952, 0.55849883526905564},
    {0.088678885463312401, 1.3581811665306522, -1.4294915254237288, -0.52906513206253358, 0.56122968193642431},
    {0.09043948754527327, 1.3556349086519666, -1.4630508474576271, -0.54249178829184763, 0.56401497591113148},
    {0.092182135653440717, 1.3530561350477499, -1.4966101694915253, -0.55597661391321218, 0.56685408313409669},
    {0.093906819699063906, 1.3504460659921613, -1.5301694915254236, -0.56951982584374872, 0.56974636604075346},
    {0.095613543744290763, 1.347805900886069, -1.5637288135593219, -0.5831215969880934, 0.57269118417916365},
    {0.097302325386073349, 1.3451368173312281, -1.5972881355932202, -0.59678205769282555, 0.57568789481657867},
    {0.098973195136597789, 1.3424399703134409, -1.6308474576271186, -0.61050129723017221, 0.57873585353293511},
    {0.10062619580277862, 1.3397164914912123, -1.6644067796610169, -0.62427936530437922, 0.58183441479988107},
    {0.10226138186720152, 1.3369674885860805, -1.6979661016949152, -0.63811627357440937, 0.58498293254405587},
    {0.10387881887273719, 1.3341940448705245, -1.7315254237288136, -0.65201199718691871, 0.58818076069346037},
    {0.10547858281288103, 1.3313972187491152, -1.7650847457627119, -0.66596647631378525, 0.59142725370589411},
    {0.10706075952970878, 1.3285780434283911, -1.79864406779661, -0.67997961768878634, 0.59472176707854874},
    {0.10862544412116708, 1.3257375266707996, -1.8322033898305083, -0.69405129613837802, 0.59806365783799253},
    {0.11017274035925452, 1.3228766506279555, -1.8657627118644067, -0.70818135610186184, 0.6014522850098899},
    {0.11170276012048207, 1.3199963717484069, -1.899322033898305, -0.72236961313660208, 0.60488701006793766},
    {0.11321562282984156, 1.3170976207550802, -1.9328813559322033, -0.73661585540429642, 0.60836719736161249},
    {0.11471145491935661, 1.314181302687593, -1.9664406779661017, -0.75091984513467336, 0.61189221452244491},
    {0.11619038930213783, 1.3112482970046695, -2, -0.76528132006333072, 0.61546143284864152},
    {0.12049851330316852, 1.3024178667420796, -2.1000000000000001, -0.80841355931566738, 0.6263529463038997},
    {0.1273965103394501, 1.2873595446874131, -2.267605633802817, -0.88181997477845853, 0.64543096248844245},
    {0.1339081830623661, 1.2720531882411739, -2.4352112676056339, -0.95657907643320095, 0.66547647988228953},
    {0.14005534034795128, 1.256573348266252, -2.6028169014084508, -1.0326343819130934, 0.68641946016830124},
    {0.14586027341003455, 1.2409823250322947, -2.7704225352112677, -1.1099247483873793, 0.70819417227086345},
    {0.15134507434918268, 1.2253317866965918, -2.9380281690140846, -1.1883866995363552, 0.73073936805563955},
    {0.15653116094078448, 1.2096643362112423, -3.1056338028169015, -1.2679561984754428, 0.75399828307911754},
    {0.16143896664924834, 1.1940149500582322, -3.2732394366197184, -1.3485699485357014, 0.77791851168352921},
    {0.16608775736550083, 1.1784122518514124, -3.4408450704225353, -1.4301663087322993, 0.80245179845778092},
    {0.17049554158231398, 1.1628796106049086, -3.6084507042253522, -1.5126859056604276, 0.82755377959008491},
    {0.17467904684410734, 1.1474360699114698, -3.7760563380281691, -1.5960720133260746, 0.85318369940929639},
    {0.17865374125417519, 1.1320971231988395, -3.943661971830986, -1.680270760376555, 0.87930412023659332},
    {0.1824338840471123, 1.1168753540942762, -4.1112676056338024, -1.7652312123569438, 0.90588063784123085},
    {0.18603259354073989, 1.1017809616370073, -4.2788732394366198, -1.8509053660321413, 0.93288161030839067},
    {0.18946192417450103, 1.0868221889996297, -4.4464788732394371, -1.937248083894596, 0.96027790482529307},
    {0.19273294692375134, 1.0720056724202827, -4.6140845070422536, -2.0242169897651956, 0.9880426645584155},
    {0.19585582929128839, 1.0573367247736818, -4.78169014084507, -2.1117723407362252, 1.0161510962126523},
    {0.19883991245949595, 1.0428195659480486, -4.9492957746478874, -2.1998768863680067, 1.0445802778406532},
    {0.20169378416363926, 1.0284575101169628, -5.1169014084507047, -2.2884957227879434, 1.0733089858503309},
    {0.20442534652252589, 1.0142531181736056, -5.2845070422535212, -2.3775961469244731, 1.1023175398185765},
    {0.20704187851859301, 1.0002083220464155, -5.4521126760563376, -2.4671475143442065, 1.1315876635683664},
    {0.2095500931179424, 0.98632452632605161, -5.619718309859155, -2.5571211028894947, 1.1611023609385742},
    {0.21195618920846293, 0.97260269157588763, -5.7873239436619723, -2.6474899834104892, 1.1908458047242116},
    {0.21426589864506046, 0.95904340283913081, -5.9549295774647888, -2.7382288982537371, 1.2208032373574091},
    {0.21648452874970558, 0.94564692616276091, -6.1225352112676052, -2.8293141477351202, 1.250960882014607},
    {0.21861700063797176, 0.93241325540219067, -6.2901408450704217, -2.9207234845337031, 1.2813058629591301},
    {0.22066788374522442, 0.91934215112527173, -6.4577464788732399, -3.012436015754111, 1.3118261340517303},
    {0.22264142691311767, 0.906433173078387, -6.6253521126760564, -3.1044321122886189, 1.342510414479489},
    {0.22454158637636826, 0.89368570739312658, -6.7929577464788728, -3.1966933250444813, 1.3733481308628732},
    {0.22637205096481047, 0.8810989894848873, -6.9605633802816893, -3.289202307571407, 1.4043293650003335},
    {0.22813626480905752, 0.86867212341311073, -7.1281690140845075, -3.3819427446172003, 1.435444806599302},
    {0.22983744781136167, 0.8564040983273864, -7.295774647887324, -3.4748992861484065, 1.4666857104220969},
    {0.23147861411749321, 0.84429380250692754, -7.4633802816901404, -3.5680574863915289, 1.4980438573455686},
    {0.23306258880122746, 0.83234003540705892, -7.6309859154929569, -3.6614037474750751, 1.5295115188952089},
    {0.23459202295065598, 0.82054151805073272, -7.7985915492957751, -3.7549252672805595, 1.5610814248686524},
    {0.23606940732512599, 0.8088969020419392, -7.9661971830985916, -3.8486099911396434, 1.5927467337108832},
    {0.23749708473315381, 0.797404777428395, -8.1338028169014081, -3.9424465670437385, 1.6245010053448423},
    {0.2388772612650896, 0.78606367960064172, -8.3014084507042245, -4.0364243040605432, 1.6563381761971878},
    {0.24021201649949489, 0.77487209538190616, -8.4690140845070427, -4.1305331336789566, 1.6882525361904488},
    {0.24150331278900541, 0.76382846843634877, -8.6366197183098592, -4.2247635738289278, 1.7202387075002064},
    {0.24275300371973382, 0.75293120410133718, -8.8042253521126757, -4.3191066953462949, 1.7522916248998848},
    {0.2439628418278722, 0.7421786737314191, -8.9718309859154921, -4.4135540906742081, 1.7844065175366124},
    {0.24513448564795706, 0.73156921862681057, -9.1394366197183103, -4.5080978446125011, 1.8165788919998418},
    {0.24626950615911328, 0.72110115360696336, -9.3070422535211268, -4.6027305069443791, 1.8488045165603699},
    {0.24736939268837813, 0.71077277027966912, -9.4746478873239433, -4.6974450667862442, 1.8810794064713814},
    {0.24843555832384195, 0.70058234004773645, -9.6422535211267597, -4.7922349285211761, 1.9133998102353114},
    {0.24946934488468939, 0.69052811688827043, -9.8098591549295779, -4.887093889190135, 1.9457621967511138},
    {0.25047202749023201, 0.68060833993383008, -9.9774647887323944, -4.9820161172269462, 1.9781632432658853},
    {0.25144481876559088, 0.67082123587984199, -10.145070422535211, -5.0769961324341422, 2.0105998240631244},
    {0.25238887271777255, 0.66116502123861731, -10.312676056338027, -5.1720287871064139, 2.0430689998271307},
    {0.25330528831238791, 0.65163790445695935, -10.480281690140844, -5.2671092482173911, 2.0755680076295282},
    {0.25419511277817536, 0.6422380879115186, -10.647887323943662, -5.362232980593328, 2.1080942514895109},
    {0.25505934466374092, 0.63296376979366209, -10.815492957746478, -5.4573957310044294, 2.1406452934644347},
    {0.25589893666847791, 0.62381314589372705, -10.983098591549295, -5.5525935131109359, 2.1732188452317702},
    {0.25671479826744742, 0.61478441129280537, -11.150704225352113, -5.6478225932068495, 2.2058127601273392},
    {0.25750779814806252, 0.60587576196888548, -11.31830985915493, -5.7430794767093269, 2.2384250256082283},
    {0.25827876647467501, 0.5970853963230367, -11.485915492957746, -5.838360895346387, 2.2710537561117934},
    {0.25902849699561581, 0.5884115166303685, -11.653521126760563, -5.933663794999763, 2.303697186284932},
    {0.25975774900585696, 0.57985233041970075, -11.821126760563379, -6.028985324163366, 2.3363536645601384},
    {0.26046724917720504, 0.57140605178529902, -11.988732394366197, -6.1243228229812718, 2.3690216470570458},
    {0.26115769326683941, 0.56307090263343218, -12.156338028169014, -6.2196738128320437, 2.4016996917900313},
    {0.26182974771399009, 0.55484511386617208, -12.32394366197183, -6.315035986428934, 2.4343864531641302},
    {0.26248405113366208, 0.54672692650442833, -12.491549295774648, -6.4104071984078939, 2.4670806767430196},
    {0.26312121571549946, 0.53871459275200517, -12.659154929577465, -6.5057854563774935, 2.4997811942741723},
    {0.26374182853514955, 0.53080637700226818, -12.826760563380281, -6.6011689124067781, 2.5324869189574235},
    {0.26434645278484087, 0.52300055678876123, -12.994366197183098, -6.6965558549288318, 2.5651968409443118},
    {0.26493562892928701, 0.5152954236811027, -13.161971830985914, -6.7919447010393812, 2.5979100230564471},
    {0.26550987579249119, 0.50768928412736192, -13.329577464788732, -6.8873339891712009, 2.6306255967120316},
    {0.26606969158055527, 0.50018046024402008, -13.497183098591549, -6.9827223721262826, 2.6633427580503897},
    {0.26661555484514654, 0.4927672905546534, -13.664788732394365, -7.0781086104489717, 2.6960607642450753},
    {0.26714792539188287, 0.48544813067842729, -13.832394366197184, -7.1734915661241905, 2.7287789299966736},
    {0.2676672451375397, 0.47822135396949084, -14, -7.268870196585909, 2.7614966241970236},
};

}  // namespace icatext::detail
