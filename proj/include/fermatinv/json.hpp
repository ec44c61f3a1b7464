#pragma once

#include <string>

#include <json.hpp>

#include "fermatinv/cycunits.hpp"
#include "fermatinv/invariant.hpp"
#include "fermatinv/padic.hpp"

namespace fermatinv {

using Json = nlohmann::ordered_json;

/* Big integers always travel as decimal strings. */
inline Json int_json(Integer const & n) { return n.get_str(); }

inline Json form_json(QuadForm const & f)
{
    return Json::array({int_json(f.a), int_json(f.b), int_json(f.c)});
}

template <ExactField F>
Json curve_json(HyperellipticCurve<F> const & c, std::string const & field)
{
    Json j;
    j["model"] = "hyperelliptic";
    j["field"] = field;
    j["f_coeffs"] = c.f().to_strings();
    return j;
}

template <ExactField F>
Json mumford_json(MumfordDivisor<F> const & D)
{
    Json j;
    j["U"] = D.U.to_strings();
    j["V"] = D.V.to_strings();
    return j;
}

Json class_group_json(ClassGroup const & cg);
Json irregularity_json(IrregularityReport const & r);
Json ramification_json(RamificationReport const & r);
Json certificate_json(NonTorsionCertificate const & c);
Json invariant_json(InvariantReport const & r);

} // namespace fermatinv
