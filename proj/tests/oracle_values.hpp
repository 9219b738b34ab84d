#pragma once

// Generated by tests/oracles/generate_oracles.py (mpmath, 80 digits). Do not edit.

namespace oracle {

inline constexpr const char* pi = "3.141592653589793238462643383279502884197169399375105820974944592307816";
inline constexpr const char* sqrt3 = "1.732050807568877293527446341505872366942805253810380628055806979451933";
inline constexpr const char* zeta3 = "1.202056903159594285399738161511449990764986292340498881792271555341838";
inline constexpr const char* s_2_1_2 = "9.869604401089358618834490999876151135313699407240790626413349376220045";
inline constexpr const char* s_2_1_3 = "13.15947253478581149177932133316820151375159920965438750188446583496006";
inline constexpr const char* s_3_1_4 = "62.01255336059964035095263013420279040445057713177021538828907620761279";
inline constexpr const char* s_3_1_6 = "214.8177862552694051885630737996558692827509232265911211521687417840351";
inline constexpr const char* s_4_1_2 = "32.46969701133414574548011089623503708324252855756180723048928646332362";
inline constexpr const char* s_3_1_5 = "123.5239602030071492246836938019068565651550988323323847757937486252359";
inline constexpr const char* s_5_2_7 = "520.0684259099109072733252341572523971261395361591988469623146928254284";
inline constexpr const char* s_11_5_12 = "14841.06268229667982905349700546446284926937058149633806116769583871716";
inline constexpr const char* s_6_1_12 = "2985986.340022491111917897952110059865153627227424399287799328165993440";
inline constexpr const char* s_4_1_4 = "259.7575760906731659638408871698802966659402284604944578439142917065889";
inline constexpr const char* s_7_3_10 = "4560.468179812904027252823653852049488609683763555776925302605373269330";
inline constexpr const char* s_2_1_97 = "9412.290558432432311305164049463022042720268555545098266170749945182908";
inline constexpr const char* psi_1_1_2 = "4.934802200544679309417245499938075567656849703620395313206674688110022";
inline constexpr const char* psi_2_1_2 = "-16.82879664423431999559633426116029987070980809276698434509180177478573";
inline constexpr const char* psi_1_1_3 = "10.09559712542709408179200409989251636051890411928097814194168320083102";
inline constexpr const char* psi_1_2_3 = "3.063875409358717409987317233275685153232695090373409359942782634129038";
inline constexpr const char* psi_3_3_4 = "19.76331253485059976025407919024672322723952411730373005117271066100317";
inline constexpr const char* psi_5_1_7 = "14117935.25364467760867291056249089010716995913128452982765972877914125";
inline constexpr const char* hurwitz_2_131_2 = "0.01538431196565763504362172195623950265850848682494930371763714480361720";
inline constexpr const char* hurwitz_7_100_3 = "0.0000000001328173126279048986936459309610893938478825767284458438185751134868454";
inline constexpr const char* hurwitz_3_1_5 = "125.7390180572179665295990450183751810318670140080030728087917456338751";
inline constexpr const char* hurwitz_12_7_4 = "0.001217597387542884504019833685099975247973317578159804092247248254965115";
inline constexpr const char* cot_1_6 = "1.732050807568877293527446341505872366942805253810380628055806979451933";
inline constexpr const char* cot_2_5 = "0.3249196962329063261558714122151344649549034715214751003078047191366729";
inline constexpr const char* cot_7_12 = "-0.2679491924311227064725536584941276330571947461896193719441930205480670";
inline constexpr const char* cot_1_7 = "2.076521396572336567163538861485840330705720206625968524083417376863028";
inline constexpr const char* zs_even_1_1_2 = "8.000000000000000000000000000000000000000000000000000000000000000000000";
inline constexpr const char* zs_odd_1_1_2 = "49.40909103400243723644033268870511124972758567268542169146785938997086";
inline constexpr const char* zs_even_1_1_4 = "1.987446639400359649047369865797209595549422868229784611710923792387210";
inline constexpr const char* zs_even_2_m1_3 = "-89.11124179029326457260249793620737639712244433593470135815353976901920";
inline constexpr const char* zs_odd_3_1_6 = "11595.64876165309991496078273008659067781870965416729646957843304672293";
inline constexpr const char* zs_even_2_2_5 = "153.1757292206358501509291935198001330907429785348728357976143747469282";
inline constexpr const char* gmr_2_1_4 = "-35.47841760435743447533796399950460454125479762896316250565339750488018";

}  // namespace oracle
