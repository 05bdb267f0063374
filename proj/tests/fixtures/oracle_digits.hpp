#pragma once

// High-precision reference values used by the numeric test suites.
// Independently computed with an arbitrary-precision library and frozen here.

namespace oracle {

inline constexpr const char* E_1000 =
    "2.71828182845904523536028747135266249775724709369995957496696762772407663035354759457138217852516642"
    "7427466391932003059921817413596629043572900334295260595630738132328627943490763233829880753195251019"
    "0115738341879307021540891499348841675092447614606680822648001684774118537423454424371075390777449920"
    "6955170276183860626133138458300075204493382656029760673711320070932870912744374704723069697720931014"
    "1692836819025515108657463772111252389784425056953696770785449969967946864454905987931636889230098793"
    "1277361782154249992295763514822082698951936680331825288693984964651058209392398294887933203625094431"
    "1730123819706841614039701983767932068328237646480429531180232878250981945581530175671736133206981125"
    "0996181881593041690351598888519345807273866738589422879228499892086805825749279610484198444363463244"
    "9684875602336248270419786232090021609902353043699418491463140934317381436405462531520961836908887070"
    "1676839642437814059271456354906130310720851038375051011574770417189861068739696552126715468895703503"
    "540212";

inline constexpr const char* PI_1000 =
    "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899862803482534211706"
    "7982148086513282306647093844609550582231725359408128481117450284102701938521105559644622948954930381"
    "9644288109756659334461284756482337867831652712019091456485669234603486104543266482133936072602491412"
    "7372458700660631558817488152092096282925409171536436789259036001133053054882046652138414695194151160"
    "9433057270365759591953092186117381932611793105118548074462379962749567351885752724891227938183011949"
    "1298336733624406566430860213949463952247371907021798609437027705392171762931767523846748184676694051"
    "3200056812714526356082778577134275778960917363717872146844090122495343014654958537105079227968925892"
    "3542019956112129021960864034418159813629774771309960518707211349999998372978049951059731732816096318"
    "5950244594553469083026425223082533446850352619311881710100031378387528865875332083814206171776691473"
    "0359825349042875546873115956286388235378759375195778185778053217122680661300192787661119590921642019"
    "893810";

inline constexpr const char* ATAN_HALF_100 =
    "0.46364760900080611621425623146121440202853705428612026381093308872019786416574170530060028398488789"
    "255652985225";

inline constexpr const char* ATAN_2PI_RE_50 =
    "1.17809724509617246442349126872981358157393852476566468286560";

inline constexpr const char* ATAN_2PI_IM_50 =
    "0.173286795139986327354308030364544142018875033590063813530170";

}  // namespace oracle
