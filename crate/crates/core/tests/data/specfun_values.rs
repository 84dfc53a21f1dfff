// Reference values summed in 50+ digit arithmetic; the largest arguments
// were cross-checked against numerical Laplace inversion.

// (eta, gamma, y, value)
pub const ML: &[(f64, f64, f64, f64)] = &[
    (0.3, 0.4, 2.0, 317945.6220913012),
    (0.3, 0.4, 0.7, 2.545754289330065),
    (0.3, 0.4, -0.5, 0.22379485874702784),
    (0.3, 0.4, -2.5, 0.05601076324541447),
    (0.3, 0.4, -9.0, 0.013440848189105533),
    (0.3, 0.4, -16.0, 0.007174516256858045),
    (0.3, 0.4, -30.0, 0.003684435832327855),
    (0.3, 0.4, -90.0, 0.0011887540396767313),
    (0.3, 0.4, -400.0, 0.0002638535218878422),
    (0.3, 1.0, 2.0, 79485.90762518356),
    (0.3, 1.0, 0.7, 3.1748201253654242),
    (0.3, 1.0, -0.5, 0.6326490059435991),
    (0.3, 1.0, -2.5, 0.24498312379478696),
    (0.3, 1.0, -9.0, 0.08019833708387393),
    (0.3, 1.0, -16.0, 0.04641594241768556),
    (0.3, 1.0, -30.0, 0.025182617502927662),
    (0.3, 1.0, -90.0, 0.00850430260528842),
    (0.3, 1.0, -400.0, 0.0019231419575059616),
    (0.3, 1.5, 2.0, 25035.768767242072),
    (0.3, 1.5, 0.7, 2.9502737553705303),
    (0.3, 1.5, -0.5, 0.7589136993302599),
    (0.3, 1.5, -2.5, 0.32093238030869403),
    (0.3, 1.5, -9.0, 0.11033156499949008),
    (0.3, 1.5, -16.0, 0.0645737445263359),
    (0.3, 1.5, -30.0, 0.035288851411203685),
    (0.3, 1.5, -90.0, 0.011986770256288115),
    (0.3, 1.5, -400.0, 0.0027169729148478565),
    (0.3, 2.3, 2.0, 3942.0067252292115),
    (0.3, 2.3, 0.7, 1.8965573760034482),
    (0.3, 2.3, -0.5, 0.6064720448054021),
    (0.3, 2.3, -2.5, 0.275989309264777),
    (0.3, 2.3, -9.0, 0.0989234642157155),
    (0.3, 2.3, -16.0, 0.05846089522111907),
    (0.3, 2.3, -30.0, 0.03215098274752001),
    (0.3, 2.3, -90.0, 0.010976771220811808),
    (0.3, 2.3, -400.0, 0.002493139148059462),
    (0.5, 0.4, 2.0, 250.95552190617192),
    (0.5, 0.4, 0.7, 2.3635821862055684),
    (0.5, 0.4, -0.5, 0.1720203965614377),
    (0.5, 0.4, -2.5, 0.00285324499231945),
    (0.5, 0.4, -9.0, -0.006984364946583245),
    (0.5, 0.4, -16.0, -0.00477360843253284),
    (0.5, 0.4, -30.0, -0.002815442143001971),
    (0.5, 0.4, -90.0, -0.0010062251789424194),
    (0.5, 0.4, -400.0, -0.00023225249803830478),
    (0.5, 1.0, 2.0, 108.94090438997797),
    (0.5, 1.0, 0.7, 2.7387021025613167),
    (0.5, 1.0, -0.5, 0.6156903441929259),
    (0.5, 1.0, -2.5, 0.2108063640611436),
    (0.5, 1.0, -9.0, 0.06230772403777468),
    (0.5, 1.0, -16.0, 0.03519337782493084),
    (0.5, 1.0, -30.0, 0.01879588886141675),
    (0.5, 1.0, -90.0, 0.0062683862608624305),
    (0.5, 1.0, -400.0, 0.001410469551179591),
    (0.5, 1.5, 2.0, 53.97045219498899),
    (0.5, 1.5, 0.7, 2.483860146516167),
    (0.5, 1.5, -0.5, 0.7686193116141482),
    (0.5, 1.5, -2.5, 0.31567745437554257),
    (0.5, 1.5, -9.0, 0.10418803066246948),
    (0.5, 1.5, -16.0, 0.060300413885941824),
    (0.5, 1.5, -30.0, 0.03270680370461944),
    (0.5, 1.5, -90.0, 0.011041462374879307),
    (0.5, 1.5, -400.0, 0.002496473826122051),
    (0.5, 2.3, 2.0, 17.073973576081247),
    (0.5, 2.3, 0.7, 1.5713035075713364),
    (0.5, 2.3, -0.5, 0.631044099380143),
    (0.5, 2.3, -2.5, 0.2968726596014366),
    (0.5, 2.3, -9.0, 0.10666558359625485),
    (0.5, 2.3, -16.0, 0.06295639643869147),
    (0.5, 2.3, -30.0, 0.03458238829609139),
    (0.5, 2.3, -90.0, 0.011793293135629298),
    (0.5, 2.3, -400.0, 0.0026772275772153423),
    (0.8, 0.4, 2.0, 22.773422605390728),
    (0.8, 0.4, 0.7, 1.9934155714079262),
    (0.8, 0.4, -0.5, 0.09585457013709944),
    (0.8, 0.4, -2.5, -0.09545938325547948),
    (0.8, 0.4, -9.0, -0.03215906633394364),
    (0.8, 0.4, -16.0, -0.01757470619235034),
    (0.8, 0.4, -30.0, -0.009181178588739977),
    (0.8, 0.4, -90.0, -0.0030099024316271165),
    (0.8, 0.4, -400.0, -0.0006727933432645772),
    (0.8, 1.0, 2.0, 13.415748887819015),
    (0.8, 1.0, 0.7, 2.2489846614912476),
    (0.8, 1.0, -0.5, 0.6030237158628037),
    (0.8, 1.0, -2.5, 0.14341738258439232),
    (0.8, 1.0, -9.0, 0.02811517744394476),
    (0.8, 1.0, -16.0, 0.014769114277815252),
    (0.8, 1.0, -30.0, 0.007575860799219208),
    (0.8, 1.0, -90.0, 0.0024541936157447615),
    (0.8, 1.0, -400.0, 0.0005462586946594058),
    (0.8, 1.5, 2.0, 8.383798464581774),
    (0.8, 1.5, 0.7, 2.0355135232268577),
    (0.8, 1.5, -0.5, 0.7935183338464108),
    (0.8, 1.5, -2.5, 0.30147335573171563),
    (0.8, 1.5, -9.0, 0.0865409559561626),
    (0.8, 1.5, -16.0, 0.04848417111018286),
    (0.8, 1.5, -30.0, 0.025779373228396015),
    (0.8, 1.5, -90.0, 0.008571229961427545),
    (0.8, 1.5, -400.0, 0.0019265413275632462),
    (0.8, 2.3, 2.0, 3.6277096487431324),
    (0.8, 2.3, 0.7, 1.2959062230447789),
    (0.8, 2.3, -0.5, 0.6697216664982035),
    (0.8, 2.3, -2.5, 0.3307623245455188),
    (0.8, 2.3, -9.0, 0.11575980123770556),
    (0.8, 2.3, -16.0, 0.0674934372490831),
    (0.8, 2.3, -30.0, 0.03675332646223722),
    (0.8, 2.3, -90.0, 0.012442310412600945),
    (0.8, 2.3, -400.0, 0.002816131564419873),
    (1.0, 0.4, 2.0, 11.282596897485767),
    (1.0, 0.4, 0.7, 1.7772953513821859),
    (1.0, 0.4, -0.5, 0.05215094044231595),
    (1.0, 0.4, -2.5, -0.19211923623230492),
    (1.0, 0.4, -9.0, -0.038486583170001754),
    (1.0, 0.4, -16.0, -0.01896288518864366),
    (1.0, 0.4, -30.0, -0.009544993381096286),
    (1.0, 0.4, -90.0, -0.0030605343505250245),
    (1.0, 0.4, -400.0, -0.0006789589862155025),
    (1.0, 1.0, 2.0, 7.38905609893065),
    (1.0, 1.0, 0.7, 2.0137527074704766),
    (1.0, 1.0, -0.5, 0.6065306597126334),
    (1.0, 1.0, -2.5, 0.0820849986238988),
    (1.0, 1.0, -9.0, 0.00012340980408667956),
    (1.0, 1.0, -16.0, 1.1253517471925912e-07),
    (1.0, 1.0, -30.0, 9.357622968840175e-14),
    (1.0, 1.0, -90.0, 8.194012623989503e-40),
    (1.0, 1.0, -400.0, -4.308356144451364e-52),
    (1.0, 1.5, 2.0, 4.987119544129813),
    (1.0, 1.5, 0.7, 1.8371261055027965),
    (1.0, 1.5, -0.5, 0.8178249139031739),
    (1.0, 1.5, -2.5, 0.2891947119667905),
    (1.0, 1.5, -9.0, 0.06705243901253347),
    (1.0, 1.5, -16.0, 0.036488397475038195),
    (1.0, 1.5, -30.0, 0.019136916678945834),
    (1.0, 1.5, -90.0, 0.0063041968938183715),
    (1.0, 1.5, -400.0, 0.0014122437046028352),
    (1.0, 2.3, 2.0, 2.377670477969858),
    (1.0, 2.3, 0.7, 1.183646461632912),
    (1.0, 2.3, -0.5, 0.6960169487572493),
    (1.0, 2.3, -2.5, 0.3577531964211698),
    (1.0, 2.3, -9.0, 0.11925671954123174),
    (1.0, 2.3, -16.0, 0.06826982683692802),
    (1.0, 2.3, -30.0, 0.03676079464404721),
    (1.0, 2.3, -90.0, 0.012338876848280942),
    (1.0, 2.3, -400.0, 0.0027835133949121707),
    (1.4, 0.4, 2.0, 5.002971851972626),
    (1.4, 0.4, 0.7, 1.4322894873276457),
    (1.4, 0.4, -0.5, 0.008285078760381911),
    (1.4, 0.4, -2.5, -0.5521549441423251),
    (1.4, 0.4, -9.0, 0.07985839776393366),
    (1.4, 0.4, -16.0, 0.04183673878240872),
    (1.4, 0.4, -30.0, -0.002547296541923056),
    (1.4, 0.4, -90.0, 0.00011473809796701258),
    (1.4, 0.4, -400.0, 5.691483854345302e-06),
    (1.4, 1.0, 2.0, 3.7612648866307654),
    (1.4, 1.0, 0.7, 1.6791746588788365),
    (1.4, 1.0, -0.5, 0.6470742387656996),
    (1.4, 1.0, -2.5, -0.06453957874123084),
    (1.4, 1.0, -9.0, -0.08937880859597541),
    (1.4, 1.0, -16.0, -0.004795762125382425),
    (1.4, 1.0, -30.0, -0.010257266023647014),
    (1.4, 1.0, -90.0, -0.003020708068409324),
    (1.4, 1.0, -400.0, -0.0006734419934295224),
    (1.4, 1.5, 2.0, 2.8057969942589036),
    (1.4, 1.5, 0.7, 1.571798235542138),
    (1.4, 1.5, -0.5, 0.8813374707945912),
    (1.4, 1.5, -2.5, 0.2893958958120822),
    (1.4, 1.5, -9.0, -0.02105611627690406),
    (1.4, 1.5, -16.0, 0.004253725037109082),
    (1.4, 1.5, -30.0, 0.003172713818440212),
    (1.4, 1.5, -90.0, 0.0011294674063291317),
    (1.4, 1.5, -400.0, 0.00026088977733808945),
    (1.4, 2.3, 2.0, 1.5119805735837981),
    (1.4, 2.3, 0.7, 1.043743787658388),
    (1.4, 2.3, -0.5, 0.7457552325374365),
    (1.4, 2.3, -2.5, 0.4354993006783149),
    (1.4, 2.3, -9.0, 0.11355951978400469),
    (1.4, 2.3, -16.0, 0.05849442918879929),
    (1.4, 2.3, -30.0, 0.03155793484322022),
    (1.4, 2.3, -90.0, 0.010432574050721871),
    (1.4, 2.3, -400.0, 0.0023412126123585784),
    (1.7, 0.4, 2.0, 3.383203523280624),
    (1.7, 0.4, 0.7, 1.23090107270362),
    (1.7, 0.4, -0.5, 0.023962607738097712),
    (1.7, 0.4, -2.5, -0.8708422903017742),
    (1.7, 0.4, -9.0, -0.06649543870700655),
    (1.7, 0.4, -16.0, 0.7645382374818507),
    (1.7, 0.4, -30.0, -0.1755809949292543),
    (1.7, 0.4, -90.0, -0.05935460108859729),
    (1.7, 0.4, -400.0, 0.000128444138659605),
    (1.7, 1.0, 2.0, 2.7505676117972975),
    (1.7, 1.0, 0.7, 1.5039889935617472),
    (1.7, 1.0, -0.5, 0.7001146605129722),
    (1.7, 1.0, -2.5, -0.1007411017923868),
    (1.7, 1.0, -9.0, -0.4250163906180555),
    (1.7, 1.0, -16.0, 0.046189850994227816),
    (1.7, 1.0, -30.0, 0.09816116417636024),
    (1.7, 1.0, -90.0, 0.010755029175108219),
    (1.7, 1.0, -400.0, -0.0005420928581995029),
    (1.7, 1.5, 2.0, 2.1720390189370287),
    (1.7, 1.5, 0.7, 1.4418924106813404),
    (1.7, 1.5, -0.5, 0.9338459721275301),
    (1.7, 1.5, -2.5, 0.35804295930028657),
    (1.7, 1.5, -9.0, -0.21169174011941386),
    (1.7, 1.5, -16.0, -0.09599338018704655),
    (1.7, 1.5, -30.0, 0.05110657876139004),
    (1.7, 1.5, -90.0, 0.00463931073035575),
    (1.7, 1.5, -400.0, -0.00041263446519062706),
    (1.7, 2.3, 2.0, 1.25111938478382),
    (1.7, 2.3, 0.7, 0.9807597477144278),
    (1.7, 2.3, -0.5, 0.7771433891726729),
    (1.7, 2.3, -2.5, 0.5172200946833154),
    (1.7, 2.3, -9.0, 0.10972113874737771),
    (1.7, 2.3, -16.0, 0.01330146162811774),
    (1.7, 2.3, -30.0, 0.022218033870031895),
    (1.7, 2.3, -90.0, 0.007584891236291385),
    (1.7, 2.3, -400.0, 0.00167853063137708),
    (1.9, 0.4, 2.0, 2.7401742967634344),
    (1.9, 0.4, 0.7, 1.116428266800025),
    (1.9, 0.4, -0.5, 0.053634437400481884),
    (1.9, 0.4, -2.5, -0.98845651839984),
    (1.9, 0.4, -9.0, -0.8199182728213676),
    (1.9, 0.4, -16.0, 0.9721188843652424),
    (1.9, 0.4, -30.0, 1.474531332530962),
    (1.9, 0.4, -90.0, 1.0813688138707656),
    (1.9, 0.4, -400.0, 0.7008724535272877),
    (1.9, 1.0, 2.0, 2.339025745127188),
    (1.9, 1.0, 0.7, 1.4113806980956518),
    (1.9, 1.0, -0.5, 0.7400968457440944),
    (1.9, 1.0, -2.5, -0.0533395751377137),
    (1.9, 1.0, -9.0, -0.8156388175700037),
    (1.9, 1.0, -16.0, -0.3079361786670745),
    (1.9, 1.0, -30.0, 0.6080477780020128),
    (1.9, 1.0, -90.0, -0.15145677106532335),
    (1.9, 1.0, -400.0, -0.034391410311709676),
    (1.9, 1.5, 2.0, 1.912242013439781),
    (1.9, 1.5, 0.7, 1.376383187363929),
    (1.9, 1.5, -0.5, 0.9671095365132669),
    (1.9, 1.5, -2.5, 0.43980830460045583),
    (1.9, 1.5, -9.0, -0.3410391523435157),
    (1.9, 1.5, -16.0, -0.35258586964670857),
    (1.9, 1.5, -30.0, 0.10110559290400989),
    (1.9, 1.5, -90.0, -0.12617015715576393),
    (1.9, 1.5, -400.0, -0.028003757663258837),
    (1.9, 2.3, 2.0, 1.1446750487845117),
    (1.9, 2.3, 0.7, 0.9508629537223058),
    (1.9, 2.3, -0.5, 0.7943795235878585),
    (1.9, 2.3, -2.5, 0.5757122870377005),
    (1.9, 2.3, -9.0, 0.14119360800175315),
    (1.9, 2.3, -16.0, -0.03258091782317699),
    (1.9, 2.3, -30.0, -0.03412357111121837),
    (1.9, 2.3, -90.0, -0.0070060512741817235),
    (1.9, 2.3, -400.0, -0.0006251206358321927),
    (2.0, 0.4, 2.0, 2.490196504717088),
    (2.0, 0.4, 0.7, 1.0641419609288698),
    (2.0, 0.4, -0.5, 0.0724533217838443),
    (2.0, 0.4, -2.5, -1.0067361672047699),
    (2.0, 0.4, -9.0, -1.3159291966685862),
    (2.0, 0.4, -16.0, 0.5433453028188308),
    (2.0, 0.4, -30.0, 2.7600440144118807),
    (2.0, 0.4, -90.0, -2.064916831936903),
    (2.0, 0.4, -400.0, -3.008328057742564),
    (2.0, 1.0, 2.0, 2.178183556608571),
    (2.0, 1.0, 0.7, 1.3708990569788135),
    (2.0, 1.0, -0.5, 0.7602445970756302),
    (2.0, 1.0, -2.5, -0.010342318905209131),
    (2.0, 1.0, -9.0, -0.9899924966004454),
    (2.0, 1.0, -16.0, -0.6536436208636119),
    (2.0, 1.0, -30.0, 0.6924191115937478),
    (2.0, 1.0, -90.0, -0.9980752050525273),
    (2.0, 1.0, -400.0, 0.40808206181339196),
    (2.0, 1.5, 2.0, 1.81101277780076),
    (2.0, 1.5, 0.7, 1.3485566392633137),
    (2.0, 1.5, -0.5, 0.9826385407893676),
    (2.0, 1.5, -2.5, 0.48750096336577065),
    (2.0, 1.5, -9.0, -0.3714838337117317),
    (2.0, 1.5, -16.0, -0.5138007943220182),
    (2.0, 1.5, -30.0, -0.01734279695170699),
    (2.0, 1.5, -90.0, -0.24639105473159956),
    (2.0, 1.5, -400.0, 0.20817389248575738),
    (2.0, 2.3, 2.0, 1.1036669225116424),
    (2.0, 2.3, 0.7, 0.9386232199670419),
    (2.0, 2.3, -0.5, 0.8018719254225275),
    (2.0, 2.3, -2.5, 0.6041333155900723),
    (2.0, 2.3, -9.0, 0.1720781224210897),
    (2.0, 2.3, -16.0, -0.04247737103828672),
    (2.0, 2.3, -30.0, -0.09413533224170056),
    (2.0, 2.3, -90.0, 0.025023099336735768),
    (2.0, 2.3, -400.0, 0.013619454678274126),
];

// (kappa, eta, y, value)
pub const WRIGHT: &[(f64, f64, f64, f64)] = &[
    (-0.5, 0.5, 1.5, 0.3214655345976037),
    (-0.5, 0.5, -0.5, 0.5300070646880571),
    (-0.5, 0.5, -2.0, 0.20755374871029736),
    (-0.5, 0.5, -6.0, 6.962652597337393e-05),
    (-0.5, 0.5, -12.0, 1.3086506196246325e-16),
    (-0.5, 0.5, -25.0, 7.814699204805633e-69),
    (-0.25, 0.75, 1.5, 1.9086806615158995),
    (-0.25, 0.75, -0.5, 0.5679688188407696),
    (-0.25, 0.75, -2.0, 0.16125108345458586),
    (-0.25, 0.75, -6.0, 0.0022713915884273747),
    (-0.25, 0.75, -12.0, 7.284317170210214e-07),
    (-0.25, 0.75, -25.0, 2.492897588033975e-16),
    (-0.35, 0.65, 1.5, 0.9879128177693662),
    (-0.35, 0.65, -0.5, 0.5539713201170677),
    (-0.35, 0.65, -2.0, 0.1764611356084),
    (-0.35, 0.65, -6.0, 0.0012316664807406246),
    (-0.35, 0.65, -12.0, 1.6326547397422405e-08),
    (-0.35, 0.65, -25.0, 6.089495711354168e-24),
    (-0.7, 0.3, 1.5, 0.08863251924309631),
    (-0.7, 0.3, -0.5, 0.4718509950077711),
    (-0.7, 0.3, -2.0, 0.24912885806519597),
    (-0.7, 0.3, -6.0, 1.069996097860903e-22),
    (-0.3, 1.2, 1.5, 3.417218860290516),
    (-0.3, 1.2, -0.5, 0.6982636469819233),
    (-0.3, 1.2, -2.0, 0.15567430119860337),
    (-0.3, 1.2, -6.0, 0.0010144882708214692),
    (-0.3, 1.2, -12.0, 5.968857489488901e-08),
    (-0.3, 1.2, -25.0, 5.866392371524793e-20),
    (-0.45, 1.45, 1.5, 3.3250599729324124),
    (-0.45, 1.45, -0.5, 0.7036474515193392),
    (-0.45, 1.45, -2.0, 0.11640952882551457),
    (-0.45, 1.45, -6.0, 4.834519321813208e-05),
    (-0.45, 1.45, -12.0, 1.1270522547120733e-13),
    (-0.45, 1.45, -25.0, 4.419792389802113e-46),
    (-0.15, 0.85, 1.5, 3.0674501140460264),
    (-0.15, 0.85, -0.5, 0.5823414073614083),
    (-0.15, 0.85, -2.0, 0.1491832471874737),
    (-0.15, 0.85, -6.0, 0.0028372633308160777),
    (-0.15, 0.85, -12.0, 4.017382654813042e-06),
    (-0.15, 0.85, -25.0, 5.507899054992428e-13),
    (0.0, 1.0, 1.5, 4.4816890703380645),
    (0.0, 1.0, -0.5, 0.6065306597126334),
    (0.0, 1.0, -2.0, 0.1353352832366127),
    (0.0, 1.0, -6.0, 0.0024787521766663585),
    (0.0, 1.0, -12.0, 6.14421235332821e-06),
    (0.5, 1.5, 1.5, 3.831446183184012),
    (0.5, 1.5, -0.5, 0.7127360944786365),
    (0.5, 1.5, -2.0, 0.12906854085646485),
    (0.5, 1.5, -6.0, -0.013977876835867908),
    (0.5, 1.5, -12.0, 0.0013850752719481562),
    (1.0, 0.5, 1.5, 3.2917000388208537),
    (1.0, 0.5, -0.5, 0.08798180820657504),
    (1.0, 0.5, -2.0, -0.5367491670600125),
    (1.0, 0.5, -6.0, 0.10466262086804515),
    (1.0, 0.5, -12.0, 0.45083768531918533),
    (-0.5, 0.0, 1.5, -0.24109915094820275),
    (-0.5, 0.0, -0.5, 0.13250176617201428),
    (-0.5, 0.0, -2.0, 0.20755374871029736),
    (-0.5, 0.0, -6.0, 0.00020887957792012178),
    (-0.5, 0.0, -12.0, 7.851903717747794e-16),
    (-0.5, 0.0, -25.0, 9.76837400600704e-68),
];
