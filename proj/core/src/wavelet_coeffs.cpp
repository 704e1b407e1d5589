// Orthonormal scaling filter tables, db1..db45 and sym2..sym20.
// Generated by tools/gen_wavelet_coeffs.py (spectral factorization at 80
// decimal digits, correctly rounded to double). Do not edit by hand.

#include "wavelet_coeffs.hpp"

namespace pdfwm::detail {

static const double k_db1[2] = {
    0.70710678118654752, 0.70710678118654752,
};
static const double k_db2[4] = {
    0.48296291314453414, 0.83651630373780791, 0.22414386804201338,
    -0.12940952255126038,
};
static const double k_db3[6] = {
    0.33267055295008262, 0.80689150931109258, 0.45987750211849157,
    -0.13501102001025459, -0.085441273882026662, 0.035226291885709537,
};
static const double k_db4[8] = {
    0.23037781330889650, 0.71484657055291565, 0.63088076792985891,
    -0.027983769416859854, -0.18703481171909308, 0.030841381835560764,
    0.032883011666885200, -0.010597401785069032,
};
static const double k_db5[10] = {
    0.16010239797419291, 0.60382926979718967, 0.72430852843777293,
    0.13842814590132073, -0.24229488706638203, -0.032244869584638375,
    0.077571493840045714, -0.0062414902127982743, -0.012580751999081999,
    0.0033357252854737713,
};
static const double k_db6[12] = {
    0.11154074335010946, 0.49462389039845309, 0.75113390802109535,
    0.31525035170919763, -0.22626469396543982, -0.12976686756726194,
    0.097501605587323049, 0.027522865530305729, -0.031582039317486030,
    0.00055384220116149614, 0.0047772575109455106, -0.0010773010853084796,
};
static const double k_db7[14] = {
    0.077852054085009179, 0.39653931948191731, 0.72913209084623512,
    0.46978228740519312, -0.14390600392856498, -0.22403618499387498,
    0.071309219266830265, 0.080612609151083072, -0.038029936935014414,
    -0.016574541630666881, 0.012550998556099841, 0.00042957797292136652,
    -0.0018016407040474909, 0.00035371379997452025,
};
static const double k_db8[16] = {
    0.054415842243104010, 0.31287159091429997, 0.67563073629728981,
    0.58535468365420671, -0.015829105256349306, -0.28401554296154693,
    0.00047248457391328277, 0.12874742662047846, -0.017369301001807546,
    -0.044088253930794752, 0.013981027917398282, 0.0087460940474057767,
    -0.0048703529934515743, -0.00039174037337694705, 0.00067544940645056937,
    -0.00011747678412476953,
};
static const double k_db9[18] = {
    0.038077947363878347, 0.24383467461259035, 0.60482312369011111,
    0.65728807805130054, 0.13319738582500758, -0.29327378327917491,
    -0.096840783222976461, 0.14854074933810638, 0.030725681479333379,
    -0.067632829061329974, 0.00025094711483145196, 0.022361662123679097,
    -0.0047232047577513973, -0.0042815036824634298, 0.0018476468830562265,
    0.00023038576352319597, -0.00025196318894271014, 3.9347320316271599e-5,
};
static const double k_db10[20] = {
    0.026670057900555554, 0.18817680007769149, 0.52720118893172559,
    0.68845903945360357, 0.28117234366057746, -0.24984642432731538,
    -0.19594627437737704, 0.12736934033579326, 0.093057364603572351,
    -0.071394147166397087, -0.029457536821875813, 0.033212674059341002,
    0.0036065535669561697, -0.010733175483330575, 0.0013953517470529012,
    0.0019924052951850561, -0.00068585669495971163, -0.00011646685512928545,
    9.3588670320069591e-5, -1.3264202894521245e-5,
};
static const double k_db11[22] = {
    0.018694297761471084, 0.14406702115062451, 0.44989976435604533,
    0.68568677491620051, 0.41196436894790746, -0.16227524502749036,
    -0.27423084681794696, 0.066043588196683192, 0.14981201246637850,
    -0.046479955116684187, -0.066438785695025205, 0.031335090219046076,
    0.020840904360181063, -0.015364820906201599, -0.0033408588730144456,
    0.0049284176560590411, -0.00030859285881514317, -0.00089302325066626461,
    0.00024915252355282350, 5.4439074699368472e-5, -3.4634984186984996e-5,
    4.4942742772365101e-6,
};
static const double k_db12[24] = {
    0.013112257957229518, 0.10956627282118515, 0.37735513521421266,
    0.65719872257930709, 0.51588647842781561, -0.044763885653774627,
    -0.31617845375278554, -0.023779257256069728, 0.18247860592757968,
    0.0053595696743521503, -0.096432120096507082, 0.010849130255822184,
    0.041546277495084441, -0.012218649069748281, -0.012840825198300683,
    0.0067114990087955092, 0.0022486072409952376, -0.0021795036186277605,
    6.5451282125095956e-6, 0.00038865306282093144, -8.8504109208204324e-5,
    -2.4241545757030784e-5, 1.2776952219379767e-5, -1.5290717580685109e-6,
};
static const double k_db13[26] = {
    0.0092021335389623680, 0.082861243872902780, 0.31199632216043806,
    0.61105585115878765, 0.58888957043121891, 0.086985726179647237,
    -0.31497290771138863, -0.12457673075081526, 0.17947607942933984,
    0.072948933656777164, -0.10580761818793433, -0.026488406475343695,
    0.056139477100283429, 0.0023799722540590788, -0.023831420710323649,
    0.0039239414487974162, 0.0072555894016175662, -0.0027619112346568622,
    -0.0013156739118922989, 0.00093232613086726339, 4.9251525126289462e-5,
    -0.00016512898855650549, 3.0678537579325493e-5, 1.0441930571408137e-5,
    -4.7004164793608683e-6, 5.2200350984548647e-7,
};
static const double k_db14[28] = {
    0.0064611534600879478, 0.062364758849398898, 0.25485026779262135,
    0.55430561794089384, 0.63118784910485678, 0.21867068775890652,
    -0.27168855227874804, -0.21803352999327604, 0.13839521386480659,
    0.13998901658446070, -0.086748411568169689, -0.071548955504046131,
    0.055237126259216044, 0.026981408307912917, -0.030185351540390635,
    -0.0056150495303569591, 0.012789493266333409, -0.00074621898926838494,
    -0.0038496388680221874, 0.0010616910856067618, 0.00070802115423552786,
    -0.00038683194731295448, -4.1777245770372597e-5, 6.8755042526975096e-5,
    -1.0337209184570774e-5, -4.3897049017813941e-6, 1.7249946753678128e-6,
    -1.7871399683113591e-7,
};
static const double k_db15[30] = {
    0.0045385373615788989, 0.046743394892766272, 0.20602386398699573,
    0.49263177170813962, 0.64581314035742436, 0.33900253545473153,
    -0.19320413960914543, -0.28888259656696565, 0.065282952848772817,
    0.19014671400712298, -0.039666176555790944, -0.11112093603723169,
    0.033877143923507686, 0.054780550584507613, -0.025767007328439963,
    -0.020810050169693082, 0.015083918027835902, 0.0051010003604075432,
    -0.0064877345603157450, -0.00024175649076162428, 0.0019433239803822115,
    -0.00037348235413761699, -0.00035956524436246881, 0.00015589648992059975,
    2.5792699155318937e-5, -2.8133296266047814e-5, 3.3629871817375798e-6,
    1.8112704079405771e-6, -6.3168823258816644e-7, 6.1333599133057520e-8,
};
static const double k_db16[32] = {
    0.0031892209253477380, 0.034907714323673346, 0.16506428348885312,
    0.43031272284600381, 0.63735633208378890, 0.44029025688635690,
    -0.089751089402489643, -0.32706331052791770, -0.027918208133028277,
    0.21119069394710429, 0.027340263752716041, -0.13238830556381039,
    -0.0062397227524748718, 0.075924236044276316, -0.0075889743688577376,
    -0.036888397691730142, 0.010297659640955969, 0.013993768859828731,
    -0.0069900145634139167, -0.0036442796214983899, 0.0031280233812062688,
    0.00040789698084971284, -0.00094102174935956759, 0.00011424152003872239,
    0.00017478724522533818, -6.1035966214109358e-5, -1.3945668988208893e-5,
    1.1336608661276259e-5, -1.0435713423116065e-6, -7.3636567854512055e-7,
    2.3087840868575459e-7, -2.1093396301007431e-8,
};
static const double k_db17[34] = {
    0.0022418070010373129, 0.025985393703606043, 0.13121490330782441,
    0.37035072415264115, 0.61099661568462282, 0.51831576405693784,
    0.027314970403293635, -0.32832074836396174, -0.12659975221588270,
    0.19731058956501099, 0.10113548917747027, -0.12681569177828631,
    -0.057091419631676927, 0.081105986654160885, 0.022312336178103796,
    -0.046922438389269737, -0.0032709555358192938, 0.022733676583946270,
    -0.0030429899813546371, -0.0086029215203228548, 0.0029679966915260949,
    0.0023012052421535456, -0.0014368453048029761, -0.00032813251940983797,
    0.00043946542776864368, -2.5610109566548459e-5, -8.2048032024533918e-5,
    2.3186813798745951e-5, 6.9906009850767513e-6, -4.5059424772229882e-6,
    3.0165496099945574e-7, 2.9577009333168568e-7, -8.4239484460026802e-8,
    7.2674929685616081e-9,
};
static const double k_db18[36] = {
    0.0015763102184407604, 0.019288531724146377, 0.10358846582242360,
    0.31467894133703170, 0.57182680776660722, 0.57180165488865134,
    0.14722311196992814, -0.29365404073655874, -0.21648093400514297,
    0.14953397556537779, 0.16708131276325740, -0.092331884150846281,
    -0.10675224665982849, 0.064887216211905443, 0.057051247738536884,
    -0.044526141902982325, -0.023733210395860001, 0.026670705926470590,
    0.0062621679543057075, -0.013051480946612002, 0.00011863003385811747,
    0.0049433436054667381, -0.0011187326669924971, -0.0013405962983361066,
    0.00062846568296514571, 0.00021358156191034069, -0.00019864855231174795,
    -1.5359171235347247e-7, 3.7412378807400382e-5, -8.5206025374466952e-6,
    -3.3326344788858219e-6, 1.7687129836276155e-6, -7.6916326898851761e-8,
    -1.1760987670282317e-7, 3.0688358630451748e-8, -2.5079344549485983e-9,
};
static const double k_db19[38] = {
    0.0011086697631817106, 0.014281098450764397, 0.081278113265459551,
    0.26438843174089678, 0.52443637746465492, 0.60170454912753789,
    0.26089495265103883, -0.22809139421548265, -0.28583863175582624,
    0.074652269708103266, 0.21234974330627849, -0.033518541902302879,
    -0.14278569503873657, 0.027584350625628669, 0.086906755555812232,
    -0.026501236250123041, -0.045674226277230908, 0.021623767409585047,
    0.019375549889176128, -0.013988388678535142, -0.0058669222810121747,
    0.0070407473671052432, 0.00076895435925754836, -0.0026875518007015820,
    0.00034180865345859578, 0.00073580252050543521, -0.00026067613567862801,
    -0.00012460079173415878, 8.7112704672199230e-5, 5.1059504870738861e-6,
    -1.6640176297154945e-5, 3.0109643162965263e-6, 1.5319314766911931e-6,
    -6.8627556577691427e-7, 1.4470882987978445e-8, 4.6369377757826042e-8,
    -1.1164020670358258e-8, 8.6668488389976194e-10,
};
static const double k_db20[40] = {
    0.00077995361366684632, 0.010549394624950398, 0.063423780459081515,
    0.21994211355139705, 0.47269618531090170, 0.61049323893859382,
    0.36150229873933106, -0.13921208801148387, -0.32678680043403497,
    -0.016727088309077008, 0.22829105081991632, 0.039850246457771202,
    -0.15545875070726796, -0.024716827338613584, 0.10229171917444256,
    0.0056322468573074355, -0.061722899624680460, 0.0058746818118118265,
    0.032294299530769582, -0.0087893249239015613, -0.013810526137151920,
    0.0067216273022594568, 0.0044205423870457910, -0.0035814942596096228,
    -0.00083156217282255692, 0.0013925596193231363, -5.3497598439976951e-5,
    -0.00038510474869921761, 0.00010153288973670291, 6.7742808283777296e-5,
    -3.7105861833947129e-5, -4.3761438621839968e-6, 7.2412482876736201e-6,
    -1.0119940100188862e-6, -6.8470795970005569e-7, 2.6339242262700011e-7,
    2.0143220235505127e-10, -1.8148432482996960e-8, 4.0561270555518328e-9,
    -2.9988364896193196e-10,
};
static const double k_db21[42] = {
    0.00054882250985268371, 0.0077766390523547838, 0.049247771538177275,
    0.18135962544038152, 0.41968794493936277, 0.60150609493500390,
    0.44459045192760034, -0.035722919617255290, -0.33566408953052951,
    -0.11239707156845098, 0.21156452768087239, 0.11523329843968710,
    -0.13994042493254722, -0.081775942980863829, 0.096600390323724221,
    0.045723405749228792, -0.064977504893732321, -0.018653859202118515,
    0.039726835427850442, 0.0033577563903381108, -0.020892053677979079,
    0.0024034709208054348, 0.0089888243819719119, -0.0028913343485889012,
    -0.0029583740389328313, 0.0017166070406306241, 0.00063941850051203021,
    -0.00069067111708210165, -3.1964062776804372e-5, 0.00019366465041650806,
    -3.6355202500863383e-5, -3.4996659849874480e-5, 1.5354825092760493e-5,
    2.7903305398144870e-6, -3.0900171645456992e-6, 3.1660954423670306e-7,
    2.9921366304648528e-7, -1.0004008790305973e-7, -2.2540149746733301e-9,
    7.0580335412311219e-9, -1.4719541976503653e-9, 1.0388055710237066e-10,
};
static const double k_db22[44] = {
    0.00038626323149109822, 0.0057218546313345391, 0.038069937236411085,
    0.14836754089011143, 0.36772868344603748, 0.57843273100952443,
    0.50790109062216390, 0.073724501183630152, -0.31272658042829619,
    -0.20056840610488709, 0.16409318810676648, 0.17997318799289130,
    -0.097110798409114710, -0.13176813768668341, 0.068076314392732216,
    0.084557376366826075, -0.051364254297444132, -0.046530811827506713,
    0.036970846620698021, 0.020586707627565360, -0.023480001344493189,
    -0.0062137828493646585, 0.012564725218343374, 0.00030013739850764360,
    -0.0054556919861567171, 0.0010442607391860253, 0.0018270104956572791,
    -0.00077069098812311962, -0.00042378739983918008, 0.00032860941421367873,
    4.3458999045320034e-5, -9.4052236348157604e-5, 1.1374349662125932e-5,
    1.7373756957561894e-5, -6.1667293164675784e-6, -1.5651791319951602e-6,
    1.2951820573188776e-6, -8.7798798733612863e-8, -1.2833362287517544e-7,
    3.7612287493373624e-8, 1.6801714049229889e-9, -2.7296231466329761e-9,
    5.3359388216674899e-10, -3.6021134843395547e-11,
};
static const double k_db23[46] = {
    0.00027190419412828884, 0.0042027488931838335, 0.029310003657884115,
    0.12051553178397193, 0.31845081385286524, 0.54493114787352043,
    0.55101851724191939, 0.18139262536384001, -0.26139214803064411,
    -0.27140209860784306, 0.092125407082418053, 0.22357365824204023,
    -0.033037447094289379, -0.16401132153187593, 0.020283074575649300,
    0.11229704361810729, -0.021126212356227241, -0.070207391574901109,
    0.021765856834499976, 0.038495332522569199, -0.018523513650156160,
    -0.017537101003035845, 0.012751943931528286, 0.0060318406500241628,
    -0.0070753192737061528, -0.0011348654733562517, 0.0031228764498181450,
    -0.00024650140051635120, -0.0010612312288866513, 0.00031942049270990115,
    0.00025676245200787372, -0.00015002185034903410, -3.3788948341209034e-5,
    4.4260712031092461e-5, -2.6352078892491862e-6, -8.3478755678546255e-6,
    2.3975695468402401e-6, 8.1475748347794478e-7, -5.3390054052094212e-7,
    1.8530917856339650e-8, 5.4175491795392787e-8, -1.3999354954379988e-8,
    -9.4728859018120505e-10, 1.0504464536965434e-9, -1.9324051113134175e-10,
    1.2502033023510409e-11,
};
static const double k_db24[48] = {
    0.00019143580094755137, 0.0030820817149054944, 0.022482339949716411,
    0.097262235833625197, 0.27290891606772633, 0.50437104083992499,
    0.57493922109554200, 0.28098555323371188, -0.18727140688515624,
    -0.31794307899936274, 0.0047766136843447282, 0.23923738878031086,
    0.042528729641483833, -0.17117535137034689, -0.038777173577920016,
    0.12101630346922424, 0.020980113709144815, -0.082161654208001667,
    -0.0045784362418192216, 0.051301620039980879, -0.0049447094281256283,
    -0.028213107094901891, 0.0076617218816465859, 0.013049970871085736,
    -0.0062914353700181878, -0.0047465687863231138, 0.0037360461782825233,
    0.0011537649368394815, -0.0016964568189748244, -4.4161848561415201e-5,
    0.00058612705931831099, -0.00011812332379695547, -0.00014600798177626168,
    6.5593886393056341e-5, 2.1832414604665584e-5, -2.0228882926126977e-5,
    1.3411577508091147e-8, 3.9011003385977026e-6, -8.9802531439384077e-7,
    -4.0325077568799716e-7, 2.1663396532785746e-7, -5.0576454197925003e-10,
    -2.2557403881760861e-8, 5.1577767896719996e-9, 4.7483758242562311e-10,
    -4.0246586445843798e-10, 6.9918011576382310e-11, -4.3427825038037102e-12,
};
static const double k_db25[50] = {
    0.00013480297934701890, 0.0022569595918547795, 0.017186741254040155,
    0.078035862872132676, 0.23169350788602182, 0.45968341514609459,
    0.58163689674605778, 0.36788507480294670, -0.097174640964638143,
    -0.33647307964174613, -0.087587614587654661, 0.22453781974510171,
    0.11815528671995986, -0.15056021375057963, -0.098508615289960222,
    0.10663380501847795, 0.066752164494018607, -0.077084111056574194,
    -0.037173962861122509, 0.053617909398779500, 0.015542605929102292,
    -0.034042320460653341, -0.0030798367948470367, 0.018922804476627628,
    -0.0019894257822027365, -0.0088607026180463684, 0.0027269362587384957,
    0.0033227077739731918, -0.0018424842902033313, -0.00089997742374629505,
    0.00087725819367482748, 0.00011532124404663005, -0.00030988009909846980,
    3.5437145232760590e-5, 7.9046400039655283e-5, -2.7330481199600417e-5,
    -1.2771952931997838e-5, 8.9906613930625889e-6, 5.2328277081530764e-7,
    -1.7792013326536346e-6, 3.2120375188625191e-7, 1.9228067901423716e-7,
    -8.6569417322785072e-8, -2.6115985561117709e-9, 9.2792244800813724e-9,
    -1.8804157550621555e-9, -2.2284749102281689e-10, 1.5359015701626572e-10,
    -2.5276251634656448e-11, 1.5096920828239109e-12,
};
static const double k_db26[52] = {
    9.4937957507105921e-5, 0.0016505202335329882, 0.013097554292558501,
    0.062274744025149605, 0.19503943871677010, 0.41329296227835637,
    0.57366904303422226, 0.43915831178916623, 0.0017740767809866857,
    -0.32638459369178002, -0.17483996128939250, 0.18129183231112270,
    0.18275540958967237, -0.10432390028592704, -0.14797719327525449,
    0.069823186113292365, 0.10648240524980863, -0.053448561681483191,
    -0.068654759604035915, 0.042232185796372035, 0.038535715971111864,
    -0.031378110363067755, -0.017760903568358184, 0.020734920179963825,
    0.0058295805553188880, -0.011785497906193029, -0.00052873839926268144,
    0.0056019472394238049, -0.00093905825047382896, -0.0021455302815676210,
    0.00083834880565436160, 0.00061613822045743442, -0.00043195570742618075,
    -0.00010605747482838039, 0.00015747952386074936, -5.2777954930378690e-6,
    -4.1096739963914778e-5, 1.0742215408721950e-5, 7.0000786829649867e-6,
    -3.8874001618567952e-6, -4.6504632206402626e-7, 7.9392106337099521e-7,
    -1.0790042375786714e-7, -8.9044663701685908e-8, 3.4077956212907300e-8,
    2.1693282598503231e-9, -3.7760104785323243e-9, 6.7800472458286367e-10,
    1.0023031910465269e-10, -5.8404081853411715e-11, 9.1305100163717962e-12,
    -5.2518712242444350e-13,
};
static const double k_db27[54] = {
    6.6871313854319317e-5, 0.0012055312316732132, 0.0099525887808766198,
    0.049452599982904880, 0.16292202750239332, 0.36711021412538982,
    0.55384986099048005, 0.49340612267799900, 0.10284085506182291,
    -0.28971680331459485, -0.24826458190326057, 0.11482301951778536,
    0.22727328841417083, -0.038786418631802311, -0.17803174095900858,
    0.015799397460240484, 0.13119797171715533, -0.014062751555808765,
    -0.091022906529565918, 0.017311018265493711, 0.057969405734717988,
    -0.018512493561998077, -0.032739066631020871, 0.016146966922395667,
    0.015665595648924579, -0.011577186458976281, -0.0058620963454629260,
    0.0068566356096848807, 0.0013426268773036796, -0.0033328544695200062,
    0.00014575296259317286, 0.0013011774502441351, -0.00034183512269154276,
    -0.00038790185741013276, 0.00020197198796903269, 7.6600583870685769e-5,
    -7.7111455177975842e-5, -3.5174836149074454e-6, 2.0634426477368853e-5,
    -3.9011640706384255e-6, -3.6575009081871050e-6, 1.6343696247256378e-6,
    3.0508806862519991e-7, -3.4724681473943893e-7, 3.2865589680551595e-8,
    4.0262550528669086e-8, -1.3213322739900566e-8, -1.3094656068569552e-9,
    1.5216149847785217e-9, -2.4155269280111307e-10, -4.3749862242936544e-11,
    2.2136620880676625e-11, -3.2957901224765858e-12, 1.8281883528824249e-13,
};
static const double k_db28[56] = {
    4.7108077750140511e-5, 0.00087949851598438703, 0.0075426503776468592,
    0.039092608115405344, 0.13513791425364105, 0.32256336128552243,
    0.52499823163033556, 0.53051629344148581, 0.20017614404598444,
    -0.23049895404758253, -0.30132780953264178, 0.032857879163387105,
    0.24580815137375955, 0.036906885315711272, -0.18287733073298492,
    -0.046838233744551676, 0.13462756791022609, 0.034478631275099705,
    -0.097685355805652442, -0.017341922831305899, 0.067747895501909340,
    0.0034480189555409511, -0.043333368616086284, 0.0044317329100629883,
    0.024688060010151866, -0.0068155497645523096, -0.012063591968218490,
    0.0058388166277489449, 0.0047848631124542417, -0.0037254612470742548,
    -0.0013603738456396924, 0.0018759986682027956, 0.00014156723931404643,
    -0.00074867495591146300, 0.00011546560636589213, 0.00022957909822334562,
    -8.9039014900444881e-5, -4.9077134161902509e-5, 3.6414012110508028e-5,
    4.6386649813942947e-6, -1.0043260413334226e-5, 1.2479003175748341e-6,
    1.8403637345177692e-6, -6.6702154799548926e-7, -1.7574611732098428e-7,
    1.4906600135353622e-7, -8.2623873156265570e-9, -1.7841386908757101e-8,
    5.0440470563834364e-9, 6.9445403289462270e-10, -6.0770412472290102e-10,
    8.4922200110563821e-11, 1.8673672637833904e-11, -8.3654904712588008e-12,
    1.1888505334059015e-12, -6.3677723547148573e-14,
};
static const double k_db29[58] = {
    3.3189662798415248e-5, 0.00064095168030444345, 0.0057021265177733754,
    0.030773580221408377, 0.11137011695174053, 0.28065345597098294,
    0.48975880476219931, 0.55137443275837520, 0.28910523833582916,
    -0.15402873445990005, -0.33004094891758805, -0.055706800072940858,
    0.23610523615302594, 0.11241917487318838, -0.16087798859418774,
    -0.10784594993872142, 0.11447229589381826, 0.083220747162449758,
    -0.085125492615635502, -0.055027489525325723, 0.063479164584211866,
    0.030531543272704136, -0.045187981277788345, -0.012917142554266795,
    0.029470431871747641, 0.0026483273076781679, -0.017041224573606690,
    0.0017378803327205112, 0.0084697254935607523, -0.0025508071277894727,
    -0.0034737989896811006, 0.0018771209257236501, 0.0010870539422260630,
    -0.0010007783270856805, -0.00020007113630767798, 0.00041112834547427670,
    -2.2920180412144999e-5, -0.00012930448400807206, 3.6450260685627750e-5,
    2.9133447501690412e-5, -1.6573283953066163e-5, -3.5936448040251876e-6,
    4.7506092464525529e-6, -3.0290545920528183e-7, -8.9757017506362807e-7,
    2.6338983869976966e-7, 9.3871974110958630e-8, -6.2861569220107862e-8,
    1.0765919066191961e-9, 7.7689788547700622e-9, -1.8939953861719841e-9,
    -3.4268008632630890e-10, 2.4070994535093430e-10, -2.9405892507645326e-11,
    -7.8325097336278170e-12, 3.1527624133703104e-12, -4.2856548700683441e-13,
    2.2191913115883030e-14,
};
static const double k_db30[60] = {
    2.3386161727314215e-5, 0.00046663795042855093, 0.0043007971650480695,
    0.024130832671588379, 0.091238304067015707, 0.24202067094021410,
    0.45048782185331784, 0.55757223291283643, 0.36624268337162798,
    -0.066183670775937315, -0.33296697502085561, -0.14196851333008293,
    0.19946212158066430, 0.17782987324483674, -0.11455821943270778,
    -0.15723681795999381, 0.072778658970364427, 0.12274774604500938,
    -0.053806465458257077, -0.087658690036383660, 0.043801664671417733,
    0.056712365744735695, -0.035673397496759610, -0.032263758919352208,
    0.027078619595294183, 0.015287960769857395, -0.018399743868117341,
    -0.0052968596661310866, 0.010915631658304889, 0.00061967175649772444,
    -0.0055307301481920033, 0.00084338458666209340, 0.0023245200940600993,
    -0.00086092769681104239, -0.00076787825043809187, 0.00050509482390334678,
    0.00017248258423517097, -0.00021617183011696338, -8.5483054675840710e-6,
    6.9820083708083279e-5, -1.3397168632939716e-5, -1.6361524787254265e-5,
    7.2521455358904690e-6, 2.3275490984936865e-6, -2.1872676769961664e-6,
    1.0994743385262033e-8, 4.2616623260115724e-7, -1.0004146823545009e-7,
    -4.7643799651394534e-8, 2.6054427549776254e-8, 5.5533978613970540e-10,
    -3.3311056804675782e-9, 6.9848626918321826e-10, 1.6136229782709044e-10,
    -9.4613879972768021e-11, 1.0001051313931712e-11, 3.2394286385322861e-12,
    -1.1852375921015823e-12, 1.5439975708476200e-13, -7.7379426309544057e-15,
};
static const double k_db31[62] = {
    1.6480133864561407e-5, 0.00033941220377699567, 0.0032368840686277212,
    0.018853691612985913, 0.074336093011647887, 0.20701287448523533,
    0.40919220003742786, 0.55113984091427550, 0.42946880820613730,
    0.027169212497369464, -0.31095511831950752, -0.21797848552356335,
    0.14017828876527327, 0.22496671147373709, -0.049926349160468240,
    -0.18696236089571545, 0.015436988429488934, 0.14508950093199320,
    -0.0081398322734692369, -0.10761277332349563, 0.010941297452364969,
    0.075353611743281407, -0.014880026618104822, -0.048619075464854330,
    0.016154171565985911, 0.028047619366756169, -0.014276275277763519,
    -0.013900552939266529, 0.010517639487371841, 0.0055161635733109926,
    -0.0065208523758746126, -0.0014282642232189099, 0.0033930667767159319,
    -6.3979011060146005e-5, -0.0014590417419851609, 0.00034313982969047344,
    0.00049988161756372226, -0.00023965834694029496, -0.00012434116172502287,
    0.00010895843504167669, 1.5013357274445330e-5, -3.6312551578600862e-5,
    4.0345202351842788e-6, 8.7953013426929878e-6, -3.0351423658915096e-6,
    -1.3690602309429408e-6, 9.8100154220443716e-7, 5.3272506569749154e-8,
    -1.9759251291702062e-7, 3.6168265173310048e-8, 2.3283097138214096e-8,
    -1.0615296021502523e-8, -6.4743116879598614e-10, 1.4085681510251774e-9,
    -2.5240439541533533e-10, -7.3489300324862639e-11, 3.6921088088711294e-11,
    -3.3270089671259799e-12, -1.3243349172439632e-12, 4.4454670962919322e-13,
    -5.5594420505790143e-14, 2.6993828797626656e-15,
};
static const double k_db32[64] = {
    1.1614633021350149e-5, 0.00024665669063809034, 0.0024312619195722661,
    0.014681046381419136, 0.060257499120335371, 0.17575078363943890,
    0.36750962859734964, 0.53431791934095383, 0.47780916373394840,
    0.12063053826561783, -0.26669818147667555, -0.27742158155842722,
    0.064713354805516238, 0.24831064235688017, 0.024662444839697404,
    -0.19210234470854690, -0.048995117184671739, 0.14523207947528665,
    0.044404908199939740, -0.10945611311608938, -0.029627872508447705,
    0.080874140638483957, 0.014106151516106608, -0.056926314062478436,
    -0.0023802644649325738, 0.037051457923544680, -0.0041459076608272188,
    -0.021662822836391193, 0.0061675273106856751, 0.011017400715406881,
    -0.0054115682572757912, -0.0046492167511844115, 0.0036272246406878650,
    0.0014689551004684678, -0.0019647405558217783, -0.00022116787295790979,
    0.00086730585184505553, -0.00010245373106073962, -0.00030596544238269118,
    0.00010539154617398281, 8.1036783291348384e-5, -5.2598092826843228e-5,
    -1.2940457794055127e-5, 1.8242684019806912e-5, -6.3617815322602550e-7,
    -4.5583095762644231e-6, 1.2028890363216210e-6, 7.5600476255959478e-7,
    -4.2859706931514573e-7, -5.0033618687482303e-8, 8.9659663119577284e-8,
    -1.2199243594833731e-8, -1.1043830217226490e-8, 4.2504223119805930e-9,
    4.3843877999404744e-10, -5.8810914626346056e-10, 8.9047237962216055e-11,
    3.2632707413329079e-11, -1.4309187651692023e-11, 1.0756106535010621e-12,
    5.3614822296118016e-13, -1.6638004894334024e-13, 2.0007153038105250e-14,
    -9.4210191395350784e-16,
};
static const double k_db33[66] = {
    8.1863583141750919e-6, 0.00017910161537027915, 0.0018227094351640842,
    0.011395943374581609, 0.048614666531716195, 0.14818631318005281,
    0.32671813011770758, 0.50937617251493966, 0.51125477058326747,
    0.20958235071305542, -0.20420262239854210, -0.31599741076656026,
    -0.019278339436952759, 0.24542061211927911, 0.099851558680338157,
    -0.17142809905185933, -0.11084413311671079, 0.12196785640373461,
    0.094788088050615959, -0.091146968351331489, -0.070302485054056159,
    0.070191143940996533, 0.045734561893896677, -0.053471251335822289,
    -0.025248582977476499, 0.038687060760244965, 0.010703265820019549,
    -0.025728761754732973, -0.0021677586173536073, 0.015316954115857665,
    -0.0015942887824146048, -0.0079535403870579392, 0.0023890624081659086,
    0.0034808009534057120, -0.0018607182144557959, -0.0012043092576046589,
    0.0010743806963512914, 0.00027273058473369372, -0.00049083290075903515,
    4.3931662517661858e-6, 0.00017804318982512454, -4.1604385162737093e-5,
    -4.9295644234173018e-5, 2.4233353988168904e-5, 9.0708057578284538e-6,
    -8.8661213667577362e-6, -3.6075161028797716e-7, 2.2883712761415273e-6,
    -4.4269234079528701e-7, -3.9857912919859441e-7, 1.8224433325710534e-7,
    3.3779727037308544e-8, -3.9878381985188807e-8, 3.6728635768381813e-9,
    5.1112118573474538e-9, -1.6713926772519325e-9, -2.4964021052461936e-10,
    2.4268331023056823e-10, -3.0495744539458634e-11, -1.4202368598899368e-11,
    5.5094147207655245e-12, -3.3434812189532788e-13, -2.1524883868333026e-13,
    6.2147402471743983e-14, -7.1965105453633224e-15, 3.2893736784163064e-16,
};
static const double k_db34[68] = {
    5.7705106327302856e-6, 0.00012994762006795300, 0.0013640613900590500,
    0.0088198894038849788, 0.039048841351785941, 0.12415248211137681,
    0.28776505923371456, 0.47847874627937106, 0.53055509965646318,
    0.29036632950727495, -0.12824684217443717, -0.33152530150838694,
    -0.10389191551564047, 0.21690722018742760, 0.16660175041220744,
    -0.12733735822380116, -0.16092492717786681, 0.077991846937948107,
    0.13412596027113613, -0.054482968064139046, -0.10294759699281409,
    0.043576094649631297, 0.073185235436795606, -0.037012838417862450,
    -0.047438559645277762, 0.030739746573959345, 0.027228350756354196,
    -0.023671737922826365, -0.013143980016657161, 0.016409374199865193,
    0.0047136492609998099, -0.010045506708361519, -0.00061947488451538728,
    0.0053349507687599360, -0.00076921279750678370, -0.0023994539435370559,
    0.00085899598743636620, 0.00087519990640786887, -0.00055273557621441980,
    -0.00023267321402335316, 0.00026507723975580578, 2.6600500184534419e-5,
    -9.9146977707801346e-5, 1.3531172272496496e-5, 2.8449514196978074e-5,
    -1.0576574942579506e-5, -5.7108265109983039e-6, 4.1698717585470284e-6,
    4.9797181014213077e-7, -1.1163065348170084e-6, 1.4481957083331851e-7,
    2.0259906666678592e-7, -7.5267017404125894e-8, -1.9903465015317369e-8,
    1.7404233329360681e-8, -8.6657442613687222e-10, -2.3165019469954828e-9,
    6.4463782103234023e-10, 1.3004103186094152e-10, -9.9047745376324090e-11,
    1.0042087354617699e-11, 6.0801253540001673e-12, -2.1078791089153015e-12,
    9.7994511582115977e-14, 8.5791940517997332e-14, -2.3170837039064085e-14,
    2.5873383819356996e-15, -1.1489447544805901e-16,
};
static const double k_db35[70] = {
    4.0679340611485590e-6, 9.4214694755767406e-5, 0.0010191226803750981,
    0.0068072928843191320, 0.031236288511490715, 0.10340445586147838,
    0.25130737899449331, 0.44359273922403544, 0.53700842750916610,
    0.36034564051804733, -0.043883881873934041, -0.32382286491211612,
    -0.18178697676672783, 0.16604135749078092, 0.21729928932108930,
    -0.065262871310677539, -0.19191958929859395, 0.019309544666018351,
    0.15529248039623711, -0.0047526808341113504, -0.12058552264339355,
    0.0047342291726419488, 0.089913547570729544, -0.0093185589499039248,
    -0.063356037440443466, 0.013228549585036555, 0.041254693064705092,
    -0.014366839784220072, -0.024169497801660267, 0.012766456715656744,
    0.012289436008118711, -0.0095777978992357100, -0.0050859916492334299,
    0.0061377545867405211, 0.0014280887940707621, -0.0033576443809223832,
    7.6159694351727365e-6, 0.0015496374697023630, -0.00033466921642508550,
    -0.00058648103189918175, 0.00026483288199612890, 0.00017000122836612490,
    -0.00013658830722611616, -2.9769959628485097e-5, 5.3041431229133102e-5,
    -2.4370015268277899e-6, -1.5724420772702817e-5, 4.3080478617167312e-6,
    3.3533458628713099e-6, -1.8959296176931533e-6, -3.9039317332873062e-7,
    5.3023686169047609e-7, -3.7003083782051245e-8, -9.9903969445349008e-8,
    3.0081886507190669e-8, 1.0849027337899348e-8, -7.4581165528930376e-9,
    5.8979513103843616e-11, 1.0308233454854334e-9, -2.4335455737516729e-10,
    -6.4079382565018890e-11, 4.0005366272537445e-11, -3.1256393571085575e-12,
    -2.5670654761550814e-12, 8.0150885336879009e-13, -2.5979543288938481e-14,
    -3.3977208567962674e-14, 8.6240374347200892e-15, -9.2980125293241854e-16,
    4.0146287123334887e-17,
};
static const double k_db36[72] = {
    2.8679251827559463e-6, 6.8260286785463587e-5, 0.00076021510996684883,
    0.0052402973774098844, 0.024890565644827965, 0.085652092595264091,
    0.21775695309790081, 0.40643369770825535, 0.53226689526072869,
    0.41787533560096979, 0.043975197529348630, -0.29442103958911457,
    -0.24680703697812553, 0.098114204163114771, 0.24653727760897421,
    0.0072785150957922290, -0.19933720560864962, -0.045861400746392716,
    0.15410623662764288, 0.050276180073538429, -0.11880375431013563,
    -0.039880853575513176, 0.091156782258016544, 0.025038721449568490,
    -0.068209016636817511, -0.011319100316817428, 0.048513083547809085,
    0.0014249726617653916, -0.031980720677639697, 0.0039840401987170049,
    0.019063594780625359, -0.0056578132450588184, -0.0099902634732813723,
    0.0050229891066658290, 0.0044134848353505753, -0.0034845414454048833,
    -0.0015030740662966437, 0.0019907937718517373, 0.00027768127957120261,
    -0.00094634038232611020, 8.6145657589927020e-5, 0.00036935072849675105,
    -0.00011551188958435271, -0.00011318994680846657, 6.6947411969305903e-5,
    2.3751066836608608e-5, -2.7313908246543379e-5, -1.1834710599856159e-6,
    8.3722181981607884e-6, -1.5861457824345775e-6, -1.8708116028591807e-6,
    8.3114212797077785e-7, 2.5484235225565778e-7, -2.4553776584342327e-7,
    2.7532490733395123e-9, 4.7990434654509920e-8, -1.1560936888170084e-8,
    -5.6127843433277914e-9, 3.1388416957824240e-9, 1.0908155537137518e-10,
    -4.5125457785632496e-10, 8.9624182038596120e-11, 3.0374290981125352e-11,
    -1.5997166892613571e-11, 8.8768462872173742e-13, 1.0709693571140170e-12,
    -3.0292850269748773e-13, 5.5422631826398042e-15, 1.3380713862991059e-14,
    -3.2046285434017499e-15, 3.3399719848186932e-16, -1.4032741753731906e-17,
};
static const double k_db37[74] = {
    2.0220608624983921e-6, 4.9423437506281320e-5, 0.00056624183770667240,
    0.0040241403682572868, 0.019762286153879592, 0.070584825977181608,
    0.18732633186206494, 0.36844097240030614, 0.51816704085562289,
    0.46220755366160571, 0.13087896323302017, -0.24618042976108341,
    -0.29437591526266177, 0.019671500452359390, 0.25152325436026869,
    0.081806028387218623, -0.18196229177860800, -0.10845171382330178,
    0.12992964695985375, 0.10178029683881418, -0.096607540616684390,
    -0.082330211906557409, 0.075047619948360179, 0.059567410871529952,
    -0.059256815632658971, -0.038253829479384249, 0.045807944151268332,
    0.020972800592597549, -0.033523584064100970, -0.0088334938904102324,
    0.022618651544599474, 0.0016904723834844237, -0.013763981962894784,
    0.0015193057788333992, 0.0073877574528555836, -0.0022480531870038247,
    -0.0033945232764083986, 0.0018168713438014235, 0.0012639342581174772,
    -0.0011114848653186302, -0.00032807884708801984, 0.00054905327733736312,
    1.5344390231955032e-5, -0.00022089440324554939, 4.3367261259456952e-5,
    7.0551387820654651e-5, -3.0986629276199301e-5, -1.6391624961605831e-5,
    1.3543277184167818e-5, 1.8499450031155904e-6, -4.3099415565970924e-6,
    4.8547313969964117e-7, 1.0021213992971776e-6, -3.4949486034457276e-7,
    -1.5098853886715836e-7, 1.1090312322164394e-7, 5.3506575154614343e-9,
    -2.2521938367248058e-8, 4.2244857063624193e-9, 2.7939744659539827e-9,
    -1.2972050014694351e-9, -1.0314111290969750e-10, 1.9461648940823150e-10,
    -3.2033982441232414e-11, -1.3984157155376415e-11, 6.3349554409739132e-12,
    -2.0963631942348005e-13, -4.4216124098721054e-13, 1.1380528309214397e-13,
    -4.5188896074637264e-16, -5.2430256918842058e-15, 1.1890123875082529e-15,
    -1.1992803358528796e-16, 4.9066150649352037e-18,
};
static const double k_db38[76] = {
    1.4257766416741317e-6, 3.5762519942640230e-5, 0.00042117026647271164,
    0.0030830881192537518, 0.015637249347572156, 0.057889943612859256,
    0.16007199356411070, 0.33077578141101465, 0.49659117531171810,
    0.49335607851710080, 0.21305057135557851, -0.18286766770833589,
    -0.32167563780899786, -0.062266506047824322, 0.23212596383535311,
    0.14998511961871702, -0.14179568597305962, -0.15991256515824436,
    0.085638121556151057, 0.14141473407338268, -0.056586458630727381,
    -0.11473117071074438, 0.043095895433047643, 0.087204398262039750,
    -0.036605103402874296, -0.061766208708413160, 0.031989877531537806,
    0.040054981105115948, -0.026891493880894514, -0.023114134020549317,
    0.020904645255655243, 0.011290497278685965, -0.014701882065398682,
    -0.0041313066560310893, 0.0092147850321971805, 0.00056257157484035320,
    -0.0050713145092183481, 0.00071698218210640193, 0.0024006977818909732,
    -0.00084486266655377750, -0.00094246140772273780, 0.00058107597505328637,
    0.00028176392503806707, -0.00030310204607266120, -4.5556826966684203e-5,
    0.00012620433501661707, -1.1554091038337172e-5, -4.1751416485403978e-5,
    1.3341761499213504e-5, 1.0373591840455998e-5, -6.4567304284696192e-6,
    -1.5508443501186026e-6, 2.1499602699396652e-6, -8.4870875860725931e-8,
    -5.1877337388741444e-7, 1.3963775455083555e-7, 8.4003510468959655e-8,
    -4.8847579374592868e-8, -5.4242748002872985e-9, 1.0347045392748585e-8,
    -1.4363294877951357e-9, -1.3491977539834488e-9, 5.2611325573575985e-10,
    6.7323364901893087e-11, -8.2782565225381347e-11, 1.1016929345994546e-11,
    6.2915373170395086e-12, -2.4847892375636429e-12, 2.6264965040652521e-14,
    1.8086612362745306e-13, -4.2498178195714630e-14, -4.5633971621273731e-16,
    2.0450996767889889e-15, -4.4053070424834613e-16, 4.3045968395587900e-17,
    -1.7161524510887442e-18,
};
static const double k_db39[78] = {
    1.0053982545871995e-6, 2.5862315334396727e-5, 0.00031284977783158717,
    0.0023569446153715988, 0.012333597271308318, 0.047265384340158513,
    0.13593319719908938, 0.29433540588349492, 0.46936086157404399,
    0.51194128029030626, 0.28750694700666340, -0.10873964994476207,
    -0.32763331044463399, -0.14091096782386932, 0.19061811531836886,
    0.20458354208152494, -0.083567610894713345, -0.19338592911224832,
    0.027032735675975697, 0.16267294821979413, -0.0044151823449293702,
    -0.13074648302845432, -4.0055566050676113e-5, 0.10180184509399964,
    -0.0033539537687260099, -0.076185550696469823, 0.0084593307320036265,
    0.053898337700045450, -0.012039397129973579, -0.035319143270047476,
    0.012959917454305507, 0.020925091393126516, -0.011520057072863414,
    -0.010841518094790433, 0.0087468075112976063, 0.0046246575888368979,
    -0.0057432226180114113, -0.0013710663610536576, 0.0032628478038717784,
    2.4755913596207106e-5, -0.0015888030751769172, 0.00032321201996041278,
    0.00064780774464687800, -0.00028052222324444042, -0.00020953989562388843,
    0.00015896862988828535, 4.5563290872238143e-5, -6.9100360462703106e-5,
    -6.2603480377854469e-7, 2.3651301595001388e-5, -5.1720762698337357e-6,
    -6.1767863473844260e-6, 2.9486716940789021e-6, 1.0715141455278685e-6,
    -1.0403556341954696e-6, -3.4847957838975586e-8, 2.6064225547112450e-7,
    -5.2057186447986239e-8, -4.4641657225559966e-8, 2.0957787171891827e-8,
    3.7773817060538422e-9, -4.6601044388631636e-9, 4.3289503697590715e-10,
    6.3539049748816788e-10, -2.0915249690216729e-10, -3.8112390404683197e-11,
    3.4758411428789485e-11, -3.5903578406279390e-12, -2.7774985564465020e-12,
    9.6537547025573485e-13, 1.2024032105774861e-14, -7.3369377882585251e-14,
    1.5773611330285131e-14, 4.1050897870849665e-16, -7.9444206349540802e-16,
    1.6299831703293736e-16, -1.5444938700235549e-17, 6.0042243745943906e-19,
};
static const double k_db40[80] = {
    7.0901058659278723e-7, 1.8692336180810839e-5, 0.00023209513141067580,
    0.0017981007546980892, 0.0096984778191784686, 0.038428136771422605,
    0.11476551476914822, 0.25977786292593698, 0.43816087469162420,
    0.51903208167031517, 0.35209587430051816, -0.028170555146057111,
    -0.31275809235868547, -0.21027586267320005, 0.13119800495958510,
    0.24017738760081102, -0.013950749432057320, -0.20452536951222130,
    -0.038147287462726453, 0.16185596569804879, 0.052166029600482612,
    -0.12673231429347720, -0.047410984537435617, 0.099420123535421257,
    0.034928362140642477, -0.077296175881412569, -0.020943753388564528,
    0.058341015707548308, 0.0089500829140135837, -0.041794876905630197,
    -0.00059477594777777221, 0.027810379360334393, -0.0038880721020162247,
    -0.016821735735421062, 0.0052450565216581005, 0.0090185696622430882,
    -0.0046735731768795356, -0.0041244903960878894, 0.0033213080699422316,
    0.0014839299562157729, -0.0019747597319539720, -0.00031187373443757407,
    0.00099291688804407332, -7.0848746549404655e-5, -0.00041816247184188433,
    0.00012111298980957377, 0.00014252761156270762, -7.8784824127881618e-5,
    -3.5664718979466450e-5, 3.6295117553374470e-5, 4.0660179666249183e-6,
    -1.2888320241357537e-5, 1.6550257250159118e-6, 3.5078332868396775e-6,
    -1.2804314477881047e-6, -6.6863488870302583e-7, 4.8834652506691549e-7,
    5.3612316791672759e-8, -1.2745089299843440e-7, 1.7410694403047795e-8,
    2.2884041448442448e-8, -8.7397284731041808e-9, -2.2733339236653049e-9,
    2.0593886969298042e-9, -9.9627150703086068e-11, -2.9288371153505964e-10,
    8.1339276862511501e-11, 1.9952985788930958e-11, -1.4414678660874875e-11,
    1.0752965662607837e-12, 1.2066824632990920e-12, -3.7146779207817696e-13,
    -1.3522696000451319e-14, 2.9538296603649141e-14, -5.8181048707950095e-15,
    -2.4502202834775991e-16, 3.0745679262737877e-16, -6.0233779324166934e-17,
    5.5397391390658758e-18, -2.1012535076232193e-19,
};
static const double k_db41[82] = {
    5.0002759774485386e-7, 1.3502944648411551e-5, 0.00017197909140297072,
    0.0013690726916594230, 0.0076045500907647605, 0.031119219654897048,
    0.096368770874049769, 0.22755245545300253, 0.40449021418706228,
    0.51599706813534062, 0.40546814611740719, 0.054656364640641835,
    -0.27887487105407594, -0.26558287996284221, 0.059382150412958439,
    0.25356180264311143, 0.059379484570376575, -0.19189573027204843,
    -0.10141423998562360, 0.13852974948248704, 0.10466648678871951,
    -0.10235210258875000, -0.091057476707661388, 0.079158612693497132,
    0.071274194860022858, -0.063357431953391691, -0.050647776954224959,
    0.050919315182701700, 0.032149581699677040, -0.039754359312925728,
    -0.017465568800812482, 0.029325481855928814, 0.0072508894107828866,
    -0.019998470414897856, -0.0012421569250939990, 0.012375071434713136,
    -0.0014861353272282453, -0.0068139730068844940, 0.0021268013961144786,
    0.0032502637388137739, -0.0017589593221657570, -0.0012791929868689089,
    0.0011228387241284744, 0.00036559249351382128, -0.00058847791637377233,
    -3.3186597208245964e-5, 0.00025603805231831678, -4.2863914479396246e-5,
    -9.0860537021982971e-5, 3.6462869659219826e-5, 2.4724775580324530e-5,
    -1.8269294112506377e-5, -4.1040349140470634e-6, 6.7754127330170856e-6,
    -2.9207145425875239e-7, -1.9153401202504485e-6, 5.2123236239464368e-7,
    3.9043134715900306e-7, -2.2210771544829255e-7, -4.3006010302588679e-8,
    6.0765746208709640e-8, -4.6794865016765587e-9, -1.1385401577079566e-8,
    3.5288819943186236e-9, 1.2611500218476203e-9, -8.9341451085394607e-10,
    3.5402670495544697e-12, 1.3248353974797942e-10, -3.0848048004828399e-11,
    -9.9287634430373710e-12, 5.9067826524688229e-12, -2.7420039483790030e-13,
    -5.1701735051018942e-13, 1.4153289627744139e-13, 8.7411118126709157e-15,
    -1.1809795898645721e-14, 2.1321764863395925e-15, 1.2636797992675895e-16,
    -1.1858160542220843e-16, 2.2231939146028621e-17, -1.9863182009847382e-18,
    7.3555357313274434e-20,
};
static const double k_db42[84] = {
    3.5266363642863421e-7, 9.7492925803067432e-6, 0.00012728877579999881,
    0.0010404708435745918, 0.0059465567208786603, 0.025106092917214892,
    0.080509565246265232, 0.19793265041527378, 0.36963579653506094,
    0.50437268114308667, 0.44700276383622973, 0.13598172269323846,
    -0.22880026041301703, -0.30349259436960978, -0.018643218932615233,
    0.24386660049120770, 0.12869592778900452, -0.15695279704515224,
    -0.15472366525492979, 0.095451082524369571, 0.14520542157475396,
    -0.060584344333509793, -0.12344129796668448, 0.043373771871608579,
    0.098681586576231676, -0.035596183411662525, -0.074489078396345995,
    0.031599451378319680, 0.052569767544851664, -0.028121027474309311,
    -0.034062270736045851, 0.023800767472828594, 0.019706306150869682,
    -0.018610781711524287, -0.0096883255798056937, 0.013225574648633869,
    0.0035762074992067557, -0.0084393294748987643, -0.00047286461777667949,
    0.0047742891054831814, -0.00068311176877626071, -0.0023514993932226243,
    0.00082533174198810497, 0.00097662597276010835, -0.00059550534770087156,
    -0.00031831443829880803, 0.00033102154460299420, 6.3074572556236138e-5,
    -0.00014951968725641454, 8.2518358507091599e-6, 5.4990078159124429e-5,
    -1.5365625194780660e-5, -1.5857458434694002e-5, 8.7806147205489353e-6,
    3.1360838951027346e-6, -3.4406499184515499e-6, -1.4412040997216648e-7,
    1.0105506595709422e-6, -1.9311635480382209e-7, -2.1711934204894756e-7,
    9.7616365092849692e-8, 2.8407159280155895e-8, -2.8277503485473924e-8,
    5.2638525683952497e-10, 5.5203019414460876e-9, -1.3706728466837232e-9,
    -6.6292676217037026e-10, 3.8051319562175236e-10, 1.5856658818581586e-11,
    -5.8919602166611751e-11, 1.1352142591146074e-11, 4.7637605063088119e-12,
    -2.3921940266905408e-12, 4.3593394823156913e-14, 2.1882405343225047e-13,
    -5.3373101692863775e-14, -4.7565544084601172e-15, 4.6915125495217362e-15,
    -7.7609725913485421e-16, -6.0384734991468107e-17, 4.5591246708227910e-17,
    -8.1963888528024399e-18, 7.1198558464314309e-19, -2.5754835368487614e-20,
};
static const double k_db43[86] = {
    2.4874348273926152e-7, 7.0357055535380241e-6, 9.4109397346750555e-5,
    0.00078934003652294951, 0.0046381041886664867, 0.020183207831342895,
    0.066938833041489440, 0.17104870002088876, 0.33466416305556776,
    0.48575287094806658, 0.47670214631027339, 0.21262646377359013,
    -0.16600109671466153, -0.32217419705985077, -0.096637754788978867,
    0.21241236248545657, 0.18706426757399213, -0.10366240029559034,
    -0.19149790246228703, 0.038030204901232323, 0.16768991457709533,
    -0.0071705446884031044, -0.13875087085580252, -0.0027288300808881128,
    0.11148016380996865, 0.0019284264776753966, -0.087018099582587709,
    0.0029680223336194677, 0.065259033180076804, -0.0079980244842621512,
    -0.046272474955988843, 0.011135351068937405, 0.030448147996889062,
    -0.011815744070995162, -0.018183397528369426, 0.010470342742128072,
    0.0095502643405874410, -0.0080102757130266943, -0.0041625936252470050,
    0.0053555524694342939, 0.0012785014174842250, -0.0031324486556898114,
    -3.7341366480688893e-5, 0.0015901233250020461, -0.00031228382125315113,
    -0.00068672295154631479, 0.00028952084791068455, 0.00024120420864060753,
    -0.00017622762356903123, -6.0666644252033170e-5, 8.3487332042977402e-5,
    4.6162210301423666e-6, -3.1829063998166008e-5, 5.5394709551629315e-6,
    9.6042900138822182e-6, -3.9990145931166105e-6, -2.1077973620548158e-6,
    1.6875920388192284e-6, 2.2153120698973991e-7, -5.1682608770674470e-7,
    6.0441371683678847e-8, 1.1614301776267373e-7, -4.1252187252515695e-8,
    -1.6978052853343636e-8, 1.2848087730391133e-8, 5.2378834971893408e-10,
    -2.6157404307810510e-9, 5.0630828014744189e-10, 3.3497685162662632e-10,
    -1.5904790352354233e-10, -1.4317854796272414e-11, 2.5798403363733814e-11,
    -4.0205108892991486e-12, -2.2225400815040717e-12, 9.5755171521847179e-13,
    1.0105476697329200e-14, -9.1602769376455992e-14, 1.9908591154563493e-14,
    2.3738178515343388e-15, -1.8526233129064935e-15, 2.8045956408455617e-16,
    2.7521548269533378e-17, -1.7477582434474284e-17, 3.0185703074957600e-18,
    -2.5513057555216530e-19, 9.0200005434003569e-21,
};
static const double k_db44[88] = {
    1.7545510471550345e-7, 5.0750657115668091e-6, 6.9506630275615278e-5,
    0.00059781410561845079, 0.0036087309181818530, 0.016171269075570349,
    0.055405048771632181, 0.14691824890071603, 0.30042669884824979,
    0.46170175939414724, 0.49507209494240777, 0.28207746677005701,
    -0.094267575519166823, -0.32123930305796917, -0.16883467334992116,
    0.16236572552904390, 0.22899817665434144, -0.037857030858145944,
    -0.20736145958764035, -0.026539355807637585, 0.16864131738507744,
    0.050357095056067926, -0.13385460063346609, -0.052016916381540282,
    0.10642196654830677, 0.043044543735577498, -0.084677459752608249,
    -0.030169440802782037, 0.066455789772412445, 0.017377093898283152,
    -0.050447833454413630, -0.0069483973204293031, 0.036315783126133977,
    -0.00011344723925487925, -0.024328318749563439, 0.0038246663429586556,
    0.014878944897998074, -0.0049009158346412620, -0.0081174278229750566,
    0.0043594769380349029, 0.0038116485730927665, -0.0031507098742721363,
    -0.0014284044099718620, 0.0019310274415356317, 0.00032696961804076311,
    -0.0010141400286453096, 5.8709294095913221e-5, 0.00045305386493025019,
    -0.00012382021090673160, -0.00016743420565921356, 8.8106070542283121e-5,
    4.7476213746207253e-5, -4.4576799421759272e-5, -7.6646920486588556e-6,
    1.7694148652042281e-5, -1.3623382756996858e-6, -5.5553418460367169e-6,
    1.7000970008876836e-6, 1.3092482327400762e-6, -7.9817089866975009e-7,
    -1.8425536319961957e-7, 2.5669276650245087e-7, -1.1805216340502174e-8,
    -6.0133319538915707e-8, 1.6614044189532125e-8, 9.5191820501649781e-9,
    -5.6976547580564052e-9, -5.8991652125534503e-10, 1.2136331875924794e-9,
    -1.7400763359471068e-10, -1.6410021408167191e-10, 6.5184113543028924e-11,
    9.3186492716405490e-12, -1.1132791534262429e-11, 1.3506419079132114e-12,
    1.0138095675788030e-12, -3.7878083693396337e-13, -1.5348263587772517e-14,
    3.7964304382961553e-14, -7.3386381318268867e-15, -1.1236719715227538e-15,
    7.2748672712769592e-16, -1.0056149225924414e-16, -1.2143464111423246e-17,
    6.6820471411182591e-18, -1.1105475713770068e-18, 9.1396257188084821e-20,
    -3.1597501957447131e-21,
};
static const double k_db45[90] = {
    1.2376635093609079e-7, 3.6591822333434305e-6, 5.1284989877374205e-5,
    0.00045203324968405820, 0.0028012996796839582, 0.012915658283556157,
    0.045663738263392350, 0.12547384643972575, 0.26757430429386357,
    0.43368877944516139, 0.50299844544984105, 0.34251229620858841,
    -0.017424146911884335, -0.30157262399756195, -0.23034622670170230,
    0.098263482946069253, 0.25087987866457245, 0.033554368775977748,
    -0.20052697100290362, -0.090322002437311087, 0.14757873418624106,
    0.10387320572035303, -0.10876195545122577, -0.096668047037591917,
    0.083296617234008966, 0.080606102729780260, -0.066598085050470262,
    -0.061691624651949669, 0.054518108196332926, 0.043200078158523400,
    -0.044354323236116521, -0.027111259855034153, 0.034852112922195050,
    0.014558618420427262, -0.025847171741695757, -0.0059085529865152794,
    0.017765343224322096, 0.00083446510242532375, -0.011135632551175138,
    0.0014769644499611913, 0.0062548294955812510, -0.0020220463398820108,
    -0.0030720049767611579, 0.0016944314173800315, 0.0012617888794972578,
    -0.0011163496304581992, -0.00038699879919121150, 0.00061245607796494046,
    4.7512135811353828e-5, -0.00028319349932012027, 4.1177374033122172e-5,
    0.00010895701722950969, -4.0675623989617481e-5, -3.3281089784356912e-5,
    2.2701714552731044e-5, 6.9168401003571230e-6, -9.4670466589345846e-6,
    -1.6869681087576604e-7, 3.0893222394439627e-6, -6.5341044268031884e-7,
    -7.6876092105834741e-7, 3.6265426851960268e-7, 1.2662954889413018e-7,
    -1.2391570081061282e-7, -3.0929519660213726e-9, 3.0255762469553111e-8,
    -6.2716568156845160e-9, -5.0967484542734968e-9, 2.4632300719267001e-9,
    4.2536795542760133e-10, -5.5209234060840261e-10, 5.2974951852569993e-11,
    7.8363705104326374e-11, -2.6153657535705833e-11, -5.3100802917156741e-12,
    4.7381531129035521e-12, -4.1819148326808881e-13, -4.5381727561931631e-13,
    1.4802030963698538e-13, 1.0715886310650072e-14, -1.5589701077940250e-14,
    2.6698614455643300e-15, 5.1303465470477588e-16, -2.8415905545607427e-16,
    3.5749055605249122e-17, 5.2324829209751640e-18, -2.5482858833145901e-18,
    4.0818026312330221e-19, -3.2732125835229197e-20, 1.1071150641507402e-21,
};
static const double k_sym2[4] = {
    -0.12940952255126038, 0.22414386804201338, 0.83651630373780791,
    0.48296291314453414,
};
static const double k_sym3[6] = {
    0.035226291885709537, -0.085441273882026662, -0.13501102001025459,
    0.45987750211849157, 0.80689150931109258, 0.33267055295008262,
};
static const double k_sym4[8] = {
    0.032223100604051468, -0.012603967262031304, -0.099219543576633533,
    0.29785779560530605, 0.80373875180513208, 0.49761866763277499,
    -0.029635527646002492, -0.075765714789502213,
};
static const double k_sym5[10] = {
    0.019538882735249827, -0.021101834024689041, -0.17532808990805622,
    0.016602105764510848, 0.63397896345679206, 0.72340769040404079,
    0.19939753397685560, -0.039134249302313844, 0.029519490925706261,
    0.027333068344998769,
};
static const double k_sym6[12] = {
    -0.0078007083250323804, 0.0017677118642540077, 0.044724901770781385,
    -0.021060292512370848, -0.072637522786376583, 0.33792942172816583,
    0.78764114102865100, 0.49105594192797373, -0.048311742585698055,
    -0.11799011114852003, 0.0034907120842221625, 0.015404109327044824,
};
static const double k_sym7[14] = {
    0.0026818145682601470, -0.0010473848886797381, -0.012636303403240567,
    0.030515513165877886, 0.067892693501220565, -0.049552834937042832,
    0.017441255086835707, 0.53610191709056923, 0.76776431700488293,
    0.28862963175064787, -0.14004724044293365, -0.10780823770328971,
    0.0040102448715223952, 0.010268176708464816,
};
static const double k_sym8[16] = {
    0.0022733632918431122, 0.0021948620922243666, -0.0078156552217745642,
    0.017824408138294089, 0.077518419279700333, 0.030220054998431863,
    0.031642421046609507, 0.42836159179395478, 0.76536333778207917,
    0.39427525208599511, -0.16084688075464810, -0.19933749673914435,
    -0.0037430812221492741, 0.036380065082249749, 0.0027148569848873346,
    -0.0028119562654580798,
};
static const double k_sym9[18] = {
    0.0010694900329086119, -0.00047315449868004354, -0.010264064027633120,
    0.0088592674934002667, 0.062077789302885748, -0.018233770779395506,
    -0.19155083129728433, 0.035272488035271043, 0.61733844914093415,
    0.71789708276441240, 0.23876091460730517, -0.054568958430833351,
    0.00058346274612498183, 0.030224878858275188, -0.011528210207679186,
    -0.013271967781817134, 0.00061978088898550708, 0.0014009155259146562,
};
static const double k_sym10[20] = {
    -0.00056560372149651908, -0.00054528934562466977, 0.0036255829247859769,
    9.4189609798514451e-5, -0.014523370186513243, 0.019572028862964581,
    0.082878331629923854, 0.038656882516867710, 0.065700544358319488,
    0.45652827917860350, 0.74791029222958164, 0.36158735345352893,
    -0.19018914666822166, -0.21987021525492687, 0.0082552571131328137,
    0.059149188296993175, 0.0046178800367393746, -0.0086910865057560190,
    -0.00060298652970420379, 0.00062545037409867062,
};
static const double k_sym11[22] = {
    0.00020716212289329739, 0.00018957317971910521, -0.0011217768447657387,
    0.0018078689844752356, 0.0098148563657008229, -0.00094959108319316595,
    -0.0066366198751467140, 0.065046133886767828, 0.11528065070146710,
    0.044839540652317912, 0.16666975335180609, 0.59530675088928892,
    0.67706691555556020, 0.13615754986097887, -0.29109020571021160,
    -0.18012747681405804, 0.036542444217810579, 0.051308469692283248,
    0.00074473032404780363, -0.0068776011079549027, -0.00037112902261431561,
    0.00040556304592251258,
};
static const double k_sym12[24] = {
    0.00014976484201678269, 0.00020395296111107572, -0.0010367221833743925,
    -0.00016644200380979761, 0.0066214450359852962, 0.0010433916735668437,
    -0.013909010757529908, 0.030433050696086369, 0.10085242149300040,
    0.067950553449474226, 0.11683683045291136, 0.48782564486498265,
    0.71750143549122901, 0.29963445595485349, -0.24417968175552414,
    -0.24652953138607873, 0.020361196486993595, 0.081757506367120999,
    0.0056059418420770904, -0.017109276088864753, -0.0018791519147637052,
    0.0021973484635157479, 0.00018231215352612291, -0.00013387376541058947,
};
static const double k_sym13[26] = {
    6.4452973783214007e-5, -4.6560113105622528e-7, -0.00079702077078927397,
    0.00035324643078664814, 0.0053980998875967647, -0.0029012935173581595,
    -0.023795772709359627, 0.013836994730241943, 0.086863759955711396,
    -0.0077770295930005824, -0.17444794363885327, 0.069185890414862519,
    0.62228169344291684, 0.70936743534787257, 0.23743300347227729,
    -0.084130568721148275, -0.035338637643111489, 0.023651595381996632,
    -0.014485105398227253, -0.020172155430316077, 0.0043394919933600894,
    0.0067222083167000922, -0.00040977876017411843, -0.0011036044918963660,
    5.3838141695906084e-7, 7.4527918937640218e-5,
};
static const double k_sym14[28] = {
    -3.3859099426096176e-5, -2.6792717220869767e-5, 0.00040880531624077028,
    0.00028514737993870392, -0.0020885802373658859, -0.00050316967725538498,
    0.0070859002833071422, -0.0050134157114176773, -0.027240951641306173,
    0.015835218189191188, 0.079213970239297847, 0.042693740935830236,
    0.10755619016129877, 0.49064214456105946, 0.72390236488630243,
    0.32112472019590801, -0.21723227473778910, -0.23123457895419714,
    0.034275530100453093, 0.094223761913993160, 0.0032118103624585440,
    -0.025015409158995187, -0.0023307108926062604, 0.0046226515718735093,
    0.00040557220103825115, -0.00056134039211052807, -2.6985755355810849e-5,
    3.4103049950043299e-5,
};
static const double k_sym15[30] = {
    1.4711204562573959e-5, 2.2373406697727126e-5, -0.00011769044454839829,
    -1.9240681405804082e-6, 0.00095726424821299586, 3.2886438915976550e-5,
    -0.0028375676932740083, 0.0044440013007223445, 0.015428290611398070,
    7.2853600336948859e-5, 0.0029862929457182171, 0.092932098676275021,
    0.15510691920253083, 0.11746965862015601, 0.25497249590913540,
    0.60145361878550150, 0.57503845705189067, 0.0084564706240234352,
    -0.37701389068308088, -0.18992444614751548, 0.090896400554466081,
    0.092749355725806317, -0.0074033556593143221, -0.024181854439373572,
    -0.0012646024802542120, 0.0039570083057997513, 0.00037183371706757529,
    -0.00039424160312695238, -2.8777297963072806e-5, 1.8921960469073946e-5,
};
static const double k_sym16[32] = {
    6.9903072862821502e-6, 1.3165551344529820e-6, -0.00010519474684529164,
    6.7589848819603097e-6, 0.00081342536711958499, -4.4723563039533949e-5,
    -0.0036959277167710349, 0.00071656850914855621, 0.012611409668369096,
    -0.0017875688418723469, -0.026441552622842414, 0.015101076629357616,
    0.054003499104940332, -0.027459903977836448, 0.016131504589173268,
    0.43301797555580528, 0.75154057297369794, 0.43070859750470395,
    -0.10906949966576196, -0.19647625399184477, 0.016628578328217489,
    0.074419624888756759, -0.0060447993849998809, -0.027061125037307737,
    0.00083971705578051482, 0.0072062833750601837, -0.00011761283274212103,
    -0.0014059633342910832, 3.8582635178676939e-6, 0.00017374146976022038,
    1.8124984078612168e-6, -9.6235398695333105e-6,
};
static const double k_sym17[34] = {
    4.2973433273382561e-6, 2.7801266938259432e-6, -6.2937025975459086e-5,
    -1.3506383399799108e-5, 0.00047599638026318306, -0.00013864230268101328,
    -0.0027416759756781813, 0.00085677007019280217, 0.010482366933016148,
    -0.0048192128031813538, -0.033291383492306217, 0.017903952214389489,
    0.10475461484219489, 0.017271178210600193, -0.11856693261099855,
    0.14239835041511389, 0.65071662920438239, 0.68148899534431699,
    0.18053958458074406, -0.15507600534970689, -0.086070874720632641,
    0.016158808725918568, -0.0072616347509339156, -0.018038897241901388,
    0.0099529825235076136, 0.012396988366634303, -0.0019054076898564055,
    -0.0039323252797949414, 5.8400428695180918e-5, 0.00071982706421454530,
    2.5207933140671322e-5, -7.6071244056029182e-5, -2.4527163425740826e-6,
    3.7912531943316249e-6,
};
static const double k_sym18[36] = {
    -1.9512868872895889e-6, -8.5064426346341115e-7, 3.4950020113057781e-5,
    2.1247445921633712e-5, -0.00026597926618970798, -0.00015603041237464338,
    0.0011976704461809877, 0.00040878716257343048, -0.0038533080836699806,
    0.00079487374647662063, 0.011059414602060380, -0.0096322040211898724,
    -0.039182331623989758, 0.0041660170528865454, 0.060398967897260122,
    0.028530728303054482, 0.12172734522355522, 0.50750446902278817,
    0.71525529123180674, 0.31161975422157751, -0.21282462773425678,
    -0.22080019893205272, 0.057348696928294685, 0.11627585632625980,
    -0.0019824459166016993, -0.040921638018261155, -0.0027602878376153196,
    0.011334501453348728, 0.0011452257192759081, -0.0023770123349252775,
    -0.00021200593558026382, 0.00037498890865125955, 2.3040012019705958e-5,
    -3.8534081354821465e-5, -8.8320922849061982e-7, 2.0259874313030378e-6,
};
static const double k_sym19[38] = {
    8.8153693147278852e-7, 1.0243817009871707e-6, -1.3004845781531389e-5,
    -1.0606525899137564e-5, 9.5737168196048622e-5, 3.4515026330313377e-5,
    -0.00047018919965979925, 0.00010899566209322134, 0.0019077027599915783,
    -0.0010369830420430853, -0.0058716730605714874, 0.0040958480088889881,
    0.012860358489335295, -0.012161404171764073, -0.010115312079315765,
    0.083944434081094454, 0.14911667101076617, 0.13377062952638619,
    0.29015447181045845, 0.60723895937725076, 0.54301424157061721,
    -0.018768169330762613, -0.37997254751649209, -0.16856807009142571,
    0.12873407093659466, 0.11128637582033219, -0.023858069432453276,
    -0.041946047801228850, 0.0010300137426867386, 0.010936613090679935,
    0.00065895524913073421, -0.0020782292826810428, -0.00018783593204835876,
    0.00028288877158484670, 2.3575591957066459e-5, -2.5082304993835666e-5,
    -1.2666137955875782e-6, 1.0899910039854951e-6,
};
static const double k_sym20[40] = {
    4.9304821616302036e-7, 2.8717354237203590e-7, -9.4916922743989735e-6,
    -5.8385610010068620e-6, 8.3948904979312034e-5, 5.1096590669269087e-5,
    -0.00044880957681736562, -0.00022714868027566851, 0.0016398410081171354,
    0.00032498725747432854, -0.0047358748136349604, 0.0017498970769132798,
    0.013602628889185575, -0.0092393814133427461, -0.039095993087763612,
    0.0067935812539520311, 0.063709256250048743, 0.038672595578504472,
    0.14319351067290747, 0.52033115713599557, 0.70219486352283822,
    0.28699568603053678, -0.22987578860755120, -0.22517609598388844,
    0.064784504886218622, 0.12406226726951548, -0.0063008281848375873,
    -0.049415268504878340, -0.0028604980119103264, 0.015355468888338054,
    0.0015743120450999930, -0.0038123337285553042, -0.00040873572270125649,
    0.00074359431108804800, 6.5409244298185122e-5, -0.00010750388288729838,
    -6.2438918907254536e-6, 1.0207761180516940e-5, 2.7630401953572677e-7,
    -4.7438633387150154e-7,
};

const double* scaling_coeffs(WaveletFamilyTag family, int order) {
    if (family == WaveletFamilyTag::db) {
        switch (order) {
        case 1: return k_db1;
        case 2: return k_db2;
        case 3: return k_db3;
        case 4: return k_db4;
        case 5: return k_db5;
        case 6: return k_db6;
        case 7: return k_db7;
        case 8: return k_db8;
        case 9: return k_db9;
        case 10: return k_db10;
        case 11: return k_db11;
        case 12: return k_db12;
        case 13: return k_db13;
        case 14: return k_db14;
        case 15: return k_db15;
        case 16: return k_db16;
        case 17: return k_db17;
        case 18: return k_db18;
        case 19: return k_db19;
        case 20: return k_db20;
        case 21: return k_db21;
        case 22: return k_db22;
        case 23: return k_db23;
        case 24: return k_db24;
        case 25: return k_db25;
        case 26: return k_db26;
        case 27: return k_db27;
        case 28: return k_db28;
        case 29: return k_db29;
        case 30: return k_db30;
        case 31: return k_db31;
        case 32: return k_db32;
        case 33: return k_db33;
        case 34: return k_db34;
        case 35: return k_db35;
        case 36: return k_db36;
        case 37: return k_db37;
        case 38: return k_db38;
        case 39: return k_db39;
        case 40: return k_db40;
        case 41: return k_db41;
        case 42: return k_db42;
        case 43: return k_db43;
        case 44: return k_db44;
        case 45: return k_db45;
        }
    } else {
        switch (order) {
        case 2: return k_sym2;
        case 3: return k_sym3;
        case 4: return k_sym4;
        case 5: return k_sym5;
        case 6: return k_sym6;
        case 7: return k_sym7;
        case 8: return k_sym8;
        case 9: return k_sym9;
        case 10: return k_sym10;
        case 11: return k_sym11;
        case 12: return k_sym12;
        case 13: return k_sym13;
        case 14: return k_sym14;
        case 15: return k_sym15;
        case 16: return k_sym16;
        case 17: return k_sym17;
        case 18: return k_sym18;
        case 19: return k_sym19;
        case 20: return k_sym20;
        }
    }
    return nullptr;
}

}  // namespace pdfwm::detail
