// @generated by gen_oracles.py (mpmath, 50 digits). Do not edit by hand.
#![allow(dead_code, clippy::excessive_precision)]
use num_complex::Complex64 as C64;
pub const GAMMA_POINTS: &[(C64, C64)] = &[
    (C64::new(0.5, 0.0), C64::new(1.7724538509055160273, 0.0)),
    (C64::new(1.0, 0.0), C64::new(1.0, 0.0)),
    (C64::new(5.0, 0.0), C64::new(24.0, 0.0)),
    (C64::new(2.5, 0.0), C64::new(1.3293403881791370205, 0.0)),
    (
        C64::new(-0.80000000000000004441, 0.0),
        C64::new(-5.7385546399985048458, 0.0),
    ),
    (C64::new(-0.5, 0.0), C64::new(-3.5449077018110320546, 0.0)),
    (
        C64::new(-20.5, 3.0),
        C64::new(
            0.000000000000000000000054423042777253346055,
            -0.000000000000000000000015696186469392754635,
        ),
    ),
    (
        C64::new(3.5, 2.6000000000000000888),
        C64::new(-1.209894845822642252, 0.0093913544887770881408),
    ),
    (
        C64::new(0.10000000000000000555, 40.0),
        C64::new(
            0.00000000000000000000000000029378054172382523491,
            0.000000000000000000000000000032967633629196981625,
        ),
    ),
    (
        C64::new(30.300000000000000711, -12.0),
        C64::new(-2.2726929380603717019e+30, 469050718127606836050000000000.0),
    ),
    (
        C64::new(49.899999999999998579, 0.0),
        C64::new(4.1180110342530352191e+62, 0.0),
    ),
    (
        C64::new(-49.5, 0.25),
        C64::new(3.0902054805088826252e-64, 4.5876159076669750914e-64),
    ),
    (
        C64::new(0.0010000000000000000208, 0.0),
        C64::new(999.4237724845954453, 0.0),
    ),
    (
        C64::new(0.00000099999999999999995475, 0.00000099999999999999995475),
        C64::new(499999.42278532417709, -499999.99999901096845),
    ),
    (
        C64::new(10.0, 10.0),
        C64::new(1423.851941789183074, -3496.081973307944589),
    ),
    (
        C64::new(-3.2999999999999998224, -7.0999999999999996447),
        C64::new(0.00000001761313517124160886, 0.0000000021412958945420858128),
    ),
    (
        C64::new(0.10000000000000000555, 0.0),
        C64::new(9.5135076986687312858, 0.0),
    ),
    (
        C64::new(2.6000000000000000888, 2.6000000000000000888),
        C64::new(-0.28353712257173951555, 0.25009985111415325612),
    ),
];
pub const ML_HALF_ONE: &[(f64, f64)] = &[
    (0.1, 1.060545677675155617),
    (0.2, 0.61777798887791757305),
    (0.3, 0.43804612741376989351),
    (0.4, 0.33845580429150705161),
    (0.5, 0.27472797707261861252),
    (0.6, 0.23034105182403646669),
    (0.7, 0.19763280005067158214),
    (0.8, 0.17253710771281248762),
    (0.9, 0.15268662719942497561),
    (1.0, 0.13660600739194928254),
];
pub const ML_THREEHALVES_THREE: &[(f64, f64)] = &[
    (0.1, 0.34206726673766073079),
    (0.2, 0.44732396487696169884),
    (0.3, 0.49395141400814544822),
    (0.4, 0.50277296087210066138),
    (0.5, 0.48469898865774443236),
    (0.6, 0.44746832596583275523),
    (0.7, 0.3972332266289840161),
    (0.8, 0.33907026223713433237),
    (0.9, 0.27717869830892996901),
    (1.0, 0.21497666776826928474),
];
pub const FORCED_HALF_ONE: &[(f64, f64)] = &[
    (0.1, 0.27642156152238450244),
    (0.2, 0.35621172786783754893),
    (0.3, 0.40798158868526434593),
    (0.4, 0.44639374621512149434),
    (0.5, 0.47684341626975325664),
    (0.6, 0.50197543142931708633),
    (0.7, 0.52329726870593614174),
    (0.8, 0.54175397720777247555),
    (0.9, 0.55797858848183460409),
    (1.0, 0.57241642384419299559),
];
pub const EXAMPLE2_Y: &[(f64, f64)] = &[
    (0.05, 0.15413708848118644063),
    (0.1, 0.18599286282727820136),
    (0.2, 0.21681798801908748553),
    (0.3, 0.23345684637347642007),
    (0.4, 0.24439525512920458856),
    (0.5, 0.25232403442962522192),
    (0.6, 0.25842409261861334427),
    (0.7, 0.26331105081112300739),
    (0.8, 0.26734301282982036564),
    (0.9, 0.27074490119677195357),
    (1.0, 0.27366628293953668319),
];
pub const PRINTED_EXAMPLE2_Y: &[(f64, f64)] = &[
    (0.1, 0.34206726673766073079),
    (0.2, 0.44732396487696169884),
    (0.3, 0.49395141400814544822),
    (0.4, 0.50277296087210066138),
    (0.5, 0.48469898865774443236),
    (0.6, 0.44746832596583275523),
    (0.7, 0.3972332266289840161),
    (0.8, 0.33907026223713433237),
    (0.9, 0.27717869830892996901),
    (1.0, 0.21497666776826928474),
];
pub const EXAMPLE5_COEFFS: &[C64] = &[
    C64::new(-0.82646831375866892121, -0.0064151499901400565971),
    C64::new(-2.1537744262577868178, 0.13495380511542003495),
    C64::new(-5.5754678598287043119, 0.73651765341823850768),
    C64::new(-14.341183101516272493, 2.8859379936618058235),
    C64::new(-36.660829277677980332, 9.9239981151909052777),
    C64::new(-93.154232164828091064, 31.775736904555900393),
    C64::new(-235.30726513480583091, 97.204261160905449742),
    C64::new(-590.92324823969723133, 287.96430768928524852),
    C64::new(-1475.3730614651323865, 832.80552968513958039),
    C64::new(-3662.1901967836658926, 2363.4320718547449095),
];
pub const EXAMPLE3_COEFFS_I1: &[(f64, f64)] = &[
    (2.0, -0.25),
    (3.5, 0.08597174606442000563),
    (5.0, -0.029166666666666666667),
    (6.5, 0.0093520158889034971159),
    (8.0, -0.0028211805555555555556),
    (9.5, 0.0008029801052185458824),
    (11.0, -0.00021657547699214365881),
    (12.5, 0.000055593488030037627966),
    (14.0, -0.000013635131907701352146),
    (15.5, 3.2064797611359403103e-6),
];
pub const EXAMPLE3_COEFFS_I2: &[(f64, f64)] = &[
    (1.0, 0.5),
    (2.5, -0.15045055561273500985),
    (4.0, 0.052083333333333333333),
    (5.5, -0.017368029507963637501),
    (7.0, 0.0054563492063492063492),
    (8.5, -0.0016136811729872700906),
    (10.0, 0.0004509066358024691358),
    (11.5, -0.00011957101423464570792),
    (13.0, 0.000030218102049699271921),
    (14.5, -7.3055904482572805454e-6),
];
pub const EXAMPLE3_Y1: &[(f64, f64)] = &[
    (0.05, 0.25169064610335172251),
    (0.1, 0.3543517211464931377),
    (0.2, 0.49492501356766637264),
    (0.3, 0.5967427995371099955),
    (0.4, 0.67685337386732439393),
    (0.5, 0.74216532101547354179),
    (0.6, 0.79645108446368315277),
    (0.7, 0.84212068629324562035),
    (0.8, 0.8808662909986232514),
    (0.9, 0.91394909165522209791),
    (1.0, 0.94234605658974067469),
];
pub const EXAMPLE3_Y2: &[(f64, f64)] = &[
    (0.05, 2.5480487419142134747),
    (0.1, 1.8336535036731753897),
    (0.2, 1.3589558355154582516),
    (0.3, 1.1730479706614917319),
    (0.4, 1.0780666994079810878),
    (0.5, 1.0241984072254348585),
    (0.6, 0.99224981281095076817),
    (0.7, 0.97310180665178219026),
    (0.8, 0.96184599021880181255),
    (0.9, 0.95561805721865846156),
    (1.0, 0.95265263199543344574),
];
pub const EXAMPLE2_OMEGA_AT_005: f64 = 0.78217108182624961496;
/// `(μ, α, Γ(μ+1)/Γ(μ+α+1), Γ(μ+1)/Γ(μ−α+1))`.
pub const OPERATOR_PAIRS: &[(C64, C64, C64, C64)] = &[
    (
        C64::new(-0.72175873253231226379, 0.0),
        C64::new(3.482722703195092695, 0.0),
        C64::new(0.72270411218517340058, 0.0),
        C64::new(4.8184388866656361995, 0.0),
    ),
    (
        C64::new(5.5207818758172635398, -1.3387728099173910046),
        C64::new(1.1493777409491234831, 0.90856083587005409541),
        C64::new(0.00031677534649806547397, -0.10003264247702197729),
        C64::new(3.4188493211344328256, 9.3716638810742205763),
    ),
    (
        C64::new(2.9589254311517567686, 0.0),
        C64::new(1.795241827817057656, 0.0),
        C64::new(0.071846104693610662575, 0.0),
        C64::new(5.2742908714387514836, 0.0),
    ),
    (
        C64::new(1.1175679438595744752, 2.0832430689708747451),
        C64::new(2.3984205832544924775, -0.34320123542577896103),
        C64::new(0.021283562439526694819, -0.037280767488719273203),
        C64::new(-12.807861737619775405, 1.4023451985293059184),
    ),
    (
        C64::new(4.3401504613631063378, 0.0),
        C64::new(2.1711640636046531938, 0.0),
        C64::new(0.021204447296652255366, 0.0),
        C64::new(17.257582027666322608, 0.0),
    ),
    (
        C64::new(3.4406474791387777756, 2.1455164657339533818),
        C64::new(1.2076942564740562602, 2.0177264591100190216),
        C64::new(-0.22171429125502257904, 0.36520562975911999594),
        C64::new(-2.3977342804491894007, 0.55242682332415175874),
    ),
    (
        C64::new(-0.60436200022686004107, 0.0),
        C64::new(3.76211409586702894, 0.0),
        C64::new(0.30560106079362126949, 0.0),
        C64::new(6.3156620760205311899, 0.0),
    ),
    (
        C64::new(4.2341295375237750775, 2.6581408898561393883),
        C64::new(3.6554862023131606819, 1.6828012627307682436),
        C64::new(0.00066022866314698711348, 0.001410093445331586214),
        C64::new(-16.749902859038799733, -22.077124568406696681),
    ),
    (
        C64::new(5.8558471296262899486, 0.0),
        C64::new(0.68842568727010045038, 0.0),
        C64::new(0.26987376685190584367, 0.0),
        C64::new(3.4392134531049393252, 0.0),
    ),
    (
        C64::new(-0.5629277981208792303, -0.50492377738750970906),
        C64::new(0.39548447454573426585, -0.44395676871851552647),
        C64::new(2.0019769660241474687, 0.74677070019283034276),
        C64::new(0.087856666974196321109, -0.013507097277083885924),
    ),
    (
        C64::new(-0.42084746245177562241, 0.0),
        C64::new(2.5875629320909481201, 0.0),
        C64::new(0.65625541444615457354, 0.0),
        C64::new(-0.026086856620330650867, 0.0),
    ),
    (
        C64::new(-0.4079230946549682324, -2.424831026534010725),
        C64::new(0.62926217320927202437, -1.7767004174668066252),
        C64::new(-6.2209641091444798044, 0.71315427033006802532),
        C64::new(-0.013381508167653970641, -0.051044742314730995619),
    ),
    (
        C64::new(2.6934209329192775328, 0.0),
        C64::new(1.5358471401105631138, 0.0),
        C64::new(0.12139817193650169965, 0.0),
        C64::new(3.8421239871482293511, 0.0),
    ),
    (
        C64::new(0.87634389984756078107, -2.2892470149165733417),
        C64::new(2.2011345128399733007, -1.9119761261158190191),
        C64::new(-0.0073084738322942252273, -0.2776061238824048144),
        C64::new(-0.059171877448293268647, 0.085073756873447848905),
    ),
    (
        C64::new(5.1488641934568688541, 0.0),
        C64::new(2.0345054971646892028, 0.0),
        C64::new(0.021204828096427391806, 0.0),
        C64::new(22.336434392755766333, 0.0),
    ),
    (
        C64::new(-0.85860672562654782869, -0.80507965918155433016),
        C64::new(2.3388036431258192316, -2.5786742941385831784),
        C64::new(0.86838348515324380926, -5.0432886527594715426),
        C64::new(-14.01801961006258604, 43.502594833218139228),
    ),
    (
        C64::new(1.3195669543850641059, 0.0),
        C64::new(0.18258859376871722224, 0.0),
        C64::new(0.88677340833052369843, 0.0),
        C64::new(1.1076463176615900977, 0.0),
    ),
    (
        C64::new(5.9972859881180120567, 2.0630236580660836765),
        C64::new(1.5584011656452911865, 0.60709876594760014967),
        C64::new(-0.0077408806444101969594, -0.050274834478282997554),
        C64::new(0.30709185667899526528, 13.510383339420254722),
    ),
    (
        C64::new(1.9722109502044349316, 0.0),
        C64::new(2.0583130889423211229, 0.0),
        C64::new(0.077577908656390606601, 0.0),
        C64::new(1.8433568843194655785, 0.0),
    ),
    (
        C64::new(-0.78954473295525695598, 2.5052942826322910364),
        C64::new(2.5790459174944211362, 0.38107214167142711148),
        C64::new(-0.090449630970382693034, 0.045401053205400341933),
        C64::new(6.2401793159449281141, -2.2398612408943936388),
    ),
    (
        C64::new(3.9528788194249635524, 0.0),
        C64::new(3.6400813393838253873, 0.0),
        C64::new(0.001312476062455535646, 0.0),
        C64::new(24.967573360684900436, 0.0),
    ),
    (
        C64::new(2.6047369395867789876, -1.5963781859755632464),
        C64::new(1.8544592043831644723, 0.39476700375957296529),
        C64::new(0.059417083077963183723, 0.0034609518170582811859),
        C64::new(5.7369936579907469376, -7.0885268739888000416),
    ),
    (
        C64::new(-0.0068025765009105398917, 0.0),
        C64::new(1.9276975075750273358, 0.0),
        C64::new(0.53932651820364925223, 0.0),
        C64::new(-0.063602761436676047881, 0.0),
    ),
    (
        C64::new(3.4292262934615180825, 1.4865946700302412609),
        C64::new(2.1884750024595298612, -1.4496023779095088546),
        C64::new(-0.0094814412846717921403, 0.020457343533123909934),
        C64::new(41.585847404084141563, -18.078208669004750239),
    ),
    (
        C64::new(1.8375560637336276759, 0.0),
        C64::new(3.532880848446180444, 0.0),
        C64::new(0.0075734861138719218299, 0.0),
        C64::new(-0.40886885965733927148, 0.0),
    ),
    (
        C64::new(4.6149231120806497586, -0.15685657459055590834),
        C64::new(3.3005410658960872006, 2.63485411281819637),
        C64::new(0.0020264875479084016713, 0.0017500628336413142928),
        C64::new(-147.7946314641520606, 238.91480330321727928),
    ),
    (
        C64::new(4.2797769087607511196, 0.0),
        C64::new(0.63996538165889260696, 0.0),
        C64::new(0.35231505692681554517, 0.0),
        C64::new(2.6054356473370817257, 0.0),
    ),
    (
        C64::new(-0.93213687986533921848, -2.4156534772590161353),
        C64::new(3.6838649881579708101, 1.3502227108608328976),
        C64::new(-0.0065901928497984788771, 0.0079318130006288159832),
        C64::new(2475.5560935287618851, 249.59767080771861067),
    ),
    (
        C64::new(2.3042039205155688819, 0.0),
        C64::new(2.3110404584849622012, 0.0),
        C64::new(0.042709019361716342587, 0.0),
        C64::new(2.6844269680349944523, 0.0),
    ),
    (
        C64::new(1.3586879389227928261, 0.47979626435763167436),
        C64::new(2.1101597987317388672, 0.62389709717363661667),
        C64::new(0.039725183595372506485, -0.11207371566621267742),
        C64::new(0.35410553690317259683, -0.090405886139450455727),
    ),
    (
        C64::new(5.0654324128836094587, 0.0),
        C64::new(3.1838692442638505398, 0.0),
        C64::new(0.0019452374038079818371, 0.0),
        C64::new(74.652547223399239164, 0.0),
    ),
    (
        C64::new(3.6708051681276101519, -0.24199256704623195446),
        C64::new(0.17254696136010505558, -1.1167843474566068185),
        C64::new(-0.097642988157566304799, 0.94720662132917537231),
        C64::new(0.0043462059860597785141, -1.3919673285534241774),
    ),
    (
        C64::new(1.7739275216601371188, 0.0),
        C64::new(2.4407208741339871949, 0.0),
        C64::new(0.049221447048880470314, 0.0),
        C64::new(0.6120852300211665586, 0.0),
    ),
    (
        C64::new(5.2074316851930948502, -0.86977200363114004489),
        C64::new(2.0208584719206097446, 1.9163174216631873037),
        C64::new(-0.018656225038085064482, 0.010724949614872818078),
        C64::new(-38.938311940348181272, 39.411039599699055518),
    ),
    (
        C64::new(4.8500025818081180518, 0.0),
        C64::new(3.0067966491886193303, 0.0),
        C64::new(0.0031334016500186850746, 0.0),
        C64::new(53.5288207309722058, 0.0),
    ),
    (
        C64::new(3.719304735607347645, 0.89461599478149400611),
        C64::new(3.8702857566211106288, 2.0162229311311712365),
        C64::new(0.00019685208761860219459, 0.0014117518917531796662),
        C64::new(21.83097155878619439, 24.017272754309554356),
    ),
    (
        C64::new(1.6465205885267997221, 0.0),
        C64::new(1.0663784393016904062, 0.0),
        C64::new(0.3498329348187847527, 0.0),
        C64::new(1.6615954928216041182, 0.0),
    ),
    (
        C64::new(0.96656679206103923718, 1.4692959162965291142),
        C64::new(1.1771608180994430626, -1.0215833963834910492),
        C64::new(0.22436907244287405092, 0.077153723022830005282),
        C64::new(6.9223013218910337656, 4.0955845634263854298),
    ),
    (
        C64::new(0.86179524498009385525, 0.0),
        C64::new(0.67031255016394386548, 0.0),
        C64::new(0.69795757949697168207, 0.0),
        C64::new(1.0312589290606470356, 0.0),
    ),
    (
        C64::new(-0.18121512282203644517, 2.4339944629052920888),
        C64::new(1.0412844907524276827, 2.902922207553022993),
        C64::new(7.5841249163341708081, 10.350244916285308518),
        C64::new(-0.023395168930853131154, -0.032571399241560065372),
    ),
    (
        C64::new(2.7920607372852943584, 0.0),
        C64::new(2.5573047737640903776, 0.0),
        C64::new(0.02111931337421666067, 0.0),
        C64::new(5.1114725855557843953, 0.0),
    ),
    (
        C64::new(-0.46371660732262925952, -0.17924665416578022814),
        C64::new(2.8295642946391139638, 1.7964380064051130859),
        C64::new(0.076606487978822774329, -0.82514809878463880495),
        C64::new(170.88936879113394503, -0.31550730957404353201),
    ),
    (
        C64::new(-0.84549958415525572342, 0.0),
        C64::new(0.52400724923749331108, 0.0),
        C64::new(4.5218329385526924273, 0.0),
        C64::new(-1.5654676938424059955, 0.0),
    ),
    (
        C64::new(1.6092004417961118801, 1.9457471072670031731),
        C64::new(1.1163298879119045726, -2.0454906848924672147),
        C64::new(-0.035127545852722034073, 0.14790270445506084308),
        C64::new(9.4488231778172441834, -33.194569918451440945),
    ),
    (
        C64::new(5.5885265521331399796, 0.0),
        C64::new(3.5076535743729309047, 0.0),
        C64::new(0.00074886233321572226687, 0.0),
        C64::new(156.47200196757666161, 0.0),
    ),
    (
        C64::new(5.2232466797038918926, -1.5086526573513063809),
        C64::new(2.9255808398841369744, 0.86492348311736932942),
        C64::new(0.0008153101581934121059, -0.0025475400417252863935),
        C64::new(133.85601891886495646, 4.911128231088484411),
    ),
    (
        C64::new(1.2617776437150973745, 0.0),
        C64::new(0.74817710401848569468, 0.0),
        C64::new(0.56513011980088807222, 0.0),
        C64::new(1.2864074072516043222, 0.0),
    ),
    (
        C64::new(0.074464862125250164127, -2.9909843944417606743),
        C64::new(3.2344076828253256473, 2.3626224312540937689),
        C64::new(0.0048104350054573911535, -0.0014990915150452051076),
        C64::new(-5044.4758913140036072, -5353.9378731248342425),
    ),
    (
        C64::new(-0.053530021477939615515, 0.0),
        C64::new(1.8433232226904872064, 0.0),
        C64::new(0.62199268410466710387, 0.0),
        C64::new(-0.10066593412240609142, 0.0),
    ),
    (
        C64::new(-0.77431781904313434772, 0.68145518910351610131),
        C64::new(3.2405001537434836578, -2.348719913860835895),
        C64::new(0.40803333350961851089, 0.24321829997804953568),
        C64::new(2980.3499366048634146, -2667.6216932843510732),
    ),
    (
        C64::new(2.6434699398457253139, 0.0),
        C64::new(2.5711923184516618512, 0.0),
        C64::new(0.022476968854766126502, 0.0),
        C64::new(4.0558440095690149279, 0.0),
    ),
    (
        C64::new(5.7954725949230594395, -1.4994391162040965337),
        C64::new(1.291066191973422761, 2.8653168565117592692),
        C64::new(0.057735064403618859627, 0.051980747381315849876),
        C64::new(0.23406867335377877923, -43.354465372329289766),
    ),
    (
        C64::new(1.712911945873513142, 0.0),
        C64::new(3.1763153832706811919, 0.0),
        C64::new(0.015694032711336633841, 0.0),
        C64::new(-0.43705654014281498901, 0.0),
    ),
    (
        C64::new(-0.72848234292563018855, -1.5385892241895271493),
        C64::new(2.1354884740787345443, -0.52107201313572826251),
        C64::new(-0.40549383248322912245, 0.11191634065796429244),
        C64::new(0.61903162932470122422, 0.95059808621025277618),
    ),
    (
        C64::new(5.7433110350364087182, 0.0),
        C64::new(1.4043990868040214792, 0.0),
        C64::new(0.065829927626770211923, 0.0),
        C64::new(11.053573056392604983, 0.0),
    ),
    (
        C64::new(1.3782189350375244619, 0.30841247858822651295),
        C64::new(0.7413581332698244708, 0.50259847492412168535),
        C64::new(0.49803586623342005137, -0.33988070201022418025),
        C64::new(1.3156092184988270296, 0.308749175314037404),
    ),
    (
        C64::new(-0.44674654058049201311, 0.0),
        C64::new(3.2624422989902295278, 0.0),
        C64::new(0.33596351587411943525, 0.0),
        C64::new(-1.7073301088078610564, 0.0),
    ),
    (
        C64::new(3.3875823957681978627, 2.2829825365750506805),
        C64::new(0.39061101042959683882, 1.1426299987219179499),
        C64::new(-0.51248075750824892474, -0.93664736780147764258),
        C64::new(-0.21339480809449232143, 1.0393894153192971406),
    ),
    (
        C64::new(3.6248868154212265935, 0.0),
        C64::new(1.5972493365386646325, 0.0),
        C64::new(0.078725444558527735622, 0.0),
        C64::new(6.7551643310876828513, 0.0),
    ),
    (
        C64::new(4.7125255251007693857, 0.90804756953803167363),
        C64::new(2.2385121619021934869, 2.287244392903300394),
        C64::new(0.0084635490621266961355, 0.027880045301322910973),
        C64::new(-28.710521089521150973, 2.3430644114237126086),
    ),
    (
        C64::new(2.0898080987243128348, 0.0),
        C64::new(1.067675283250899998, 0.0),
        C64::new(0.29657633875303642831, 0.0),
        C64::new(2.1556243875286755962, 0.0),
    ),
    (
        C64::new(3.9216060124383842478, -1.3574759395544344631),
        C64::new(3.1546616601853059159, 0.20814532299386012681),
        C64::new(0.0030906797786717563893, 0.00092682761108166100309),
        C64::new(8.4039958403469908232, -40.593706562104963872),
    ),
    (
        C64::new(2.444381605304974947, 0.0),
        C64::new(0.95190460224840844905, 0.0),
        C64::new(0.31008497424481857394, 0.0),
        C64::new(2.3648745574069560891, 0.0),
    ),
    (
        C64::new(0.52451977374141267596, 2.0224407017059009561),
        C64::new(2.2053059958929708273, -0.34193632642244109476),
        C64::new(0.023306534407966013504, -0.074488067116780146861),
        C64::new(-10.397230706656587062, -0.94694427495814063493),
    ),
    (
        C64::new(4.1381830381508732941, 0.0),
        C64::new(2.088958432847543456, 0.0),
        C64::new(0.026774955350152909164, 0.0),
        C64::new(14.142993265151278213, 0.0),
    ),
    (
        C64::new(4.3444886244530289687, -0.9896821211790829409),
        C64::new(3.3247669972750446554, -0.92724190412046869625),
        C64::new(-0.0018144206820239074278, 0.0014284223898186743918),
        C64::new(1.0257752884555611719, -36.672760516996828551),
    ),
    (
        C64::new(5.3678454026421915657, 0.0),
        C64::new(3.1345217477664393257, 0.0),
        C64::new(0.0018970547506862775507, 0.0),
        C64::new(90.757490715743444456, 0.0),
    ),
    (
        C64::new(4.1174683185993616874, 2.6031886142406364115),
        C64::new(0.79154277023098640331, 2.6590730620182947419),
        C64::new(0.87996851018951667164, 0.99180633265034332064),
        C64::new(-0.78073393981827293695, -1.3494995889641338937),
    ),
    (
        C64::new(1.3847129095637271678, 0.0),
        C64::new(1.8302740845271030512, 0.0),
        C64::new(0.15547037432710334276, 0.0),
        C64::new(0.76687786829534134097, 0.0),
    ),
    (
        C64::new(2.3103157613323341835, 2.5259698866673936379),
        C64::new(0.81750121615284065957, -2.248833556764862962),
        C64::new(-0.11635308639828788343, 0.080100693277071905052),
        C64::new(-24.486498088228877484, -17.313123058431066746),
    ),
    (
        C64::new(4.2702669357981122289, 0.0),
        C64::new(3.2084507035213980508, 0.0),
        C64::new(0.0027067911538997600637, 0.0),
        C64::new(35.363610679279319515, 0.0),
    ),
    (
        C64::new(2.8972212397660257466, 0.078199219627482108308),
        C64::new(1.6312700751333024662, -1.0998704086482877784),
        C64::new(-0.019500285084437162257, 0.10490051155883900805),
        C64::new(5.2216484813049871336, -4.0724201265156691932),
    ),
    (
        C64::new(3.8821838882504922097, 0.0),
        C64::new(0.32259286646213758409, 0.0),
        C64::new(0.61330959649018191303, 0.0),
        C64::new(1.5923615271826114665, 0.0),
    ),
    (
        C64::new(1.9748549208499126539, -0.207792122080897812),
        C64::new(1.9490363438033873056, -1.658005437874916943),
        C64::new(-0.11617796866569778304, 0.063631630463516540499),
        C64::new(6.1913725989758171881, -0.22947641410371670164),
    ),
    (
        C64::new(1.6737772634658301119, 0.0),
        C64::new(1.9281309942778945832, 0.0),
        C64::new(0.11276224174520147358, 0.0),
        C64::new(1.2288126910667322392, 0.0),
    ),
    (
        C64::new(2.0536284613356166062, -0.86974352090409556837),
        C64::new(3.8427044898626663283, 0.17717777550469460124),
        C64::new(0.0028674010964309972902, 0.0013876400666814539447),
        C64::new(-1.0140652423994143751, 4.8488928169052510502),
    ),
    (
        C64::new(2.9413745916707281225, 0.0),
        C64::new(3.8535267825305559164, 0.0),
        C64::new(0.0016682625364000648333, 0.0),
        C64::new(0.51225978175210066642, 0.0),
    ),
    (
        C64::new(0.81733987072701363985, -2.3970786652828497409),
        C64::new(2.0856528794822115636, -2.3829982327090570848),
        C64::new(0.37559059819761883347, -0.3827340242254729186),
        C64::new(-0.0071160378968525730863, 0.041028038754384753344),
    ),
    (
        C64::new(5.3741296739372872437, 0.0),
        C64::new(0.70523258406439015555, 0.0),
        C64::new(0.27523033341563244968, 0.0),
        C64::new(3.3383590125736475701, 0.0),
    ),
    (
        C64::new(2.0386934863783672256, -1.8084005002326872802),
        C64::new(3.4367610070353187268, 0.2282773814241259025),
        C64::new(0.0026836673697854572789, 0.0043496454786546751484),
        C64::new(-14.151447562236117826, 16.384123494070994766),
    ),
    (
        C64::new(2.3804821259916701948, 0.0),
        C64::new(3.5417715383599950307, 0.0),
        C64::new(0.0046887116771364303021, 0.0),
        C64::new(-0.41919358675918161833, 0.0),
    ),
    (
        C64::new(4.3713987388209218921, 1.0437278757506804894),
        C64::new(3.5335267492226494213, 1.3376464809964794256),
        C64::new(-0.001545482433888178425, 0.00047486103338609123399),
        C64::new(-7.6996526615642288455, 41.057048690731905978),
    ),
    (
        C64::new(0.82917224140650591657, 0.0),
        C64::new(1.481318881641298546, 0.0),
        C64::new(0.34630581069316542913, 0.0),
        C64::new(0.36661647407832366311, 0.0),
    ),
    (
        C64::new(3.2032481166643052006, 0.021928216132701017216),
        C64::new(1.0057518260397384502, -2.5619048048256107819),
        C64::new(-0.26716058440739880507, -0.36594735047310583141),
        C64::new(-9.1916582636927242568, -2.6519543612598328737),
    ),
    (
        C64::new(2.2864065128979200736, 0.0),
        C64::new(0.83106616245639686191, 0.0),
        C64::new(0.37976918981658358271, 0.0),
        C64::new(2.0529786802384777079, 0.0),
    ),
    (
        C64::new(5.7736637799903887114, -2.4908377595688051542),
        C64::new(2.0274525289110996162, 2.1310910672660465792),
        C64::new(-0.0082742858722394790267, 0.0074889549556209922153),
        C64::new(-142.12914806384613163, 58.96871283884728531),
    ),
    (
        C64::new(1.7119773172175423159, 0.0),
        C64::new(3.9433930530659146996, 0.0),
        C64::new(0.0040919997959909470459, 0.0),
        C64::new(0.36990337643669772495, 0.0),
    ),
    (
        C64::new(0.3725650237617077476, 2.7048261487194409369),
        C64::new(0.74467210857432164506, -2.1669021379235262614),
        C64::new(0.051207707216888276016, 0.072718467060236845218),
        C64::new(-14.433372259964708159, -57.344509293768150358),
    ),
    (
        C64::new(4.7565685149831526957, 0.0),
        C64::new(2.2322400112547571283, 0.0),
        C64::new(0.016163662550635497096, 0.0),
        C64::new(23.329364265087169054, 0.0),
    ),
    (
        C64::new(3.8339482190447382592, -0.29656959982743735793),
        C64::new(3.3208505843482729603, 1.5897837652994812885),
        C64::new(-0.0029930553839647986835, -0.00019989456502533234528),
        C64::new(70.914894508706514221, 16.100636110271340716),
    ),
    (
        C64::new(2.7328786281723989049, 0.0),
        C64::new(2.0192054625364193043, 0.0),
        C64::new(0.054827590805026800395, 0.0),
        C64::new(4.7564236032986670416, 0.0),
    ),
    (
        C64::new(5.019748876536722193, -2.2078562391115719166),
        C64::new(0.43245181309211744303, 0.51678543807470012084),
        C64::new(0.27253778378051179878, -0.27509722295499794637),
        C64::new(2.0114814870034365597, 1.7837719871150538108),
    ),
    (
        C64::new(2.0322792352300433905, 0.0),
        C64::new(3.8105074640780967066, 0.0),
        C64::new(0.0038349507075249077967, 0.0),
        C64::new(-0.38971719452901963206, 0.0),
    ),
    (
        C64::new(2.6654279802724323289, -2.6595982730145002471),
        C64::new(2.6952945987154608432, -1.1890851527314869607),
        C64::new(-0.017782903340674353599, -0.011656951458613876927),
        C64::new(-4.5111284098667734658, 1.933472502948168107),
    ),
    (
        C64::new(0.31451839280438442792, 0.0),
        C64::new(2.3163298614690477351, 0.0),
        C64::new(0.23255686907626163473, 0.0),
        C64::new(0.0016231800172434053103, 0.0),
    ),
    (
        C64::new(5.4443710369404580973, 2.7691447085286489127),
        C64::new(0.68047896970033783237, -0.88873711680907163668),
        C64::new(0.02389261877070581645, 0.19835661502136086454),
        C64::new(1.4824684516219609655, -5.4595830084242413829),
    ),
    (
        C64::new(4.5846107386504204584, 0.0),
        C64::new(0.092830665385229965691, 0.0),
        C64::new(0.85903018603832640051, 0.0),
        C64::new(1.1621383218436429095, 0.0),
    ),
    (
        C64::new(4.8167459259819231931, 2.8335695107973339901),
        C64::new(0.63966012984248177276, -2.099604573949391817),
        C64::new(-0.15438062079026261006, -0.066687909755405473203),
        C64::new(-12.286810651914279338, 4.083364002125131739),
    ),
    (
        C64::new(-0.87429815025785817539, 0.0),
        C64::new(0.674714810592842551, 0.0),
        C64::new(6.4358836115848013362, 0.0),
        C64::new(-2.0938999224529835812, 0.0),
    ),
    (
        C64::new(0.20078487783243859077, 1.272712051738055905),
        C64::new(3.7678744880994901045, 1.9449169006224682477),
        C64::new(0.019181471581323378087, 0.048544762021934392663),
        C64::new(-1.5653996521582737419, -0.92234027488079578067),
    ),
];
