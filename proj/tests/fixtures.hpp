#pragma once

// Reference polynomials, transcribed by hand.

#include "thetamod/polyring.hpp"

namespace fixtures {

inline const std::vector<std::string>& xy() {
    static const std::vector<std::string> v{"X", "Y"};
    return v;
}

inline thetamod::SparsePoly q3() {
    return thetamod::parse_poly("9-(252-2304Y+2304Y^2)X+2430X^2-8748X^3+6561X^4", xy());
}

inline thetamod::SparsePoly b6() {
    return thetamod::parse_poly(
        "9Y^16+72Y^14+(-1008X^4+252)Y^12+(30816X^4+504)Y^10"
        "+(38880X^8-15120X^4+630)Y^8+(155520X^8-93888X^4+504)Y^6"
        "+(-559872X^12+233280X^8-15120X^4+252)Y^4"
        "+(-1119744X^12+155520X^8+30816X^4+72)Y^2"
        "+1679616X^16-559872X^12+38880X^8-1008X^4+9",
        xy());
}

inline thetamod::SparsePoly q6() {
    return thetamod::parse_poly(
        "81Y^8+18144XY^7+(1715904X^2-5344704X)Y^6"
        "+(88459776X^3+907448832X^2+58392576X)Y^5"
        "+(2670589440X^4-11804341248X^3+1470721536X^2-180486144X)Y^4"
        "+(46921752576X^5-92553560064X^4+34882265088X^3-4756340736X^2+212336640X)Y^3"
        "+(444063596544X^6-148021198848X^5+96423395328X^4-23254843392X^3+2378170368X^2-84934656X)Y^2"
        "+(1880739938304X^7-1044855521280X^6+162533081088X^5-7739670528X^4)Y"
        "+2821109907456X^8-3761479876608X^7+1044855521280X^6-108355387392X^5+3869835264X^4",
        xy());
}

}  // namespace fixtures
