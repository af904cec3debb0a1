#include "stokes/certificate.hpp"

#include <json.hpp>

namespace stokes {

namespace {

using nlohmann::json;

json jiv(const Interval& v) {
    return json{{"lo", to_decimal(v.lo())}, {"hi", to_decimal(v.hi())}};
}

json jci(const ComplexInterval& z) {
    return json{{"re", jiv(z.re)}, {"im", jiv(z.im)}};
}

json jbox(const StateBox& b) {
    return json{{"x1", jiv(b.x1)}, {"y1", jiv(b.y1)}, {"x2", jiv(b.x2)},
                {"y2", jiv(b.y2)}, {"s1", jiv(b.s1)}, {"s2", jiv(b.s2)}};
}

json jhit(const SectionHit& h) {
    return json{{"state", jbox(h.state)}, {"time", jiv(h.time)}};
}

json jtable(const ConstantTable& t) {
    json m11 = json::array(), m12 = json::array();
    for (const auto& v : t.m11) m11.push_back(jiv(v));
    for (const auto& v : t.m12) m12.push_back(jiv(v));
    return json{
        {"rho", jiv(t.rho)},   {"C0", jiv(t.c0)}, {"M0", jiv(t.m0)},
        {"M11", m11},          {"M12", m12},      {"L1", jiv(t.l1)},
        {"L2", jiv(t.l2)},     {"L", jiv(t.l)},   {"A1", jiv(t.a1)},
        {"A2", jiv(t.a2)},     {"A", jiv(t.a)},   {"Mbar", jiv(t.mbar)},
    };
}

}  // namespace

const char* conclusion_name(Conclusion c) {
    return c == Conclusion::NonzeroCertified ? "NONZERO_CERTIFIED" : "INCONCLUSIVE";
}

std::string to_json(const StokesCertificate& cert) {
    json j;
    j["schema_version"] = 1;
    j["problem"] = cert.problem;
    j["mode"] = cert.mode;
    j["conclusion"] = conclusion_name(cert.conclusion);
    j["thresholds"] = {
        {"rho1", to_decimal(cert.thresholds.rho1)},
        {"rho2", to_decimal(cert.thresholds.rho2)},
        {"rho_star", to_decimal(cert.thresholds.rho_star)},
        {"rho0", to_decimal(cert.thresholds.rho0)},
    };
    j["constants"] = jtable(cert.table);
    if (cert.delta) {
        const DeltaEnclosure& d = *cert.delta;
        j["delta"] = {
            {"rho_star_enclosure", jiv(d.rho_star_enc)},
            {"delta_phi", jci(d.delta_phi)},
            {"delta_varphi", jci(d.delta_varphi)},
            {"nonzero_certified", d.nonzero_certified},
            {"hit_minus", jhit(d.hit_minus)},
            {"hit_plus", jhit(d.hit_plus)},
            {"hit_plus_lower", jhit(d.hit_plus_l)},
            {"hit_plus_upper", jhit(d.hit_plus_u)},
        };
    }
    if (cert.kappa) j["kappa0"] = jci(*cert.kappa);
    if (cert.theta_basic_enc) j["theta_basic"] = jci(*cert.theta_basic_enc);
    if (cert.theta_refined_enc) j["theta_refined"] = jci(*cert.theta_refined_enc);
    if (cert.refinement) {
        j["refinement"] = {
            {"series_factor", jiv(cert.refinement->series_factor)},
            {"tail_bound_ES", jiv(cert.refinement->es_bound)},
            {"linearization_bound_ETheta", jiv(cert.refinement->etheta_bound)},
            {"Mstar", jiv(cert.refinement->mstar)},
        };
    }
    j["notes"] = cert.notes;
    j["parameters"] = {
        {"shooting",
         {{"s_minus_re", to_decimal(cert.shooting.s_minus_re)},
          {"s_minus_im", to_decimal(-cert.shooting.s_minus_im)},
          {"s_plus_re", to_decimal(cert.shooting.s_plus_re)},
          {"rho_bar", to_decimal(cert.shooting.rho_bar)},
          {"half_width", to_decimal(cert.shooting.half_width)}}},
        {"integrator",
         {{"order", cert.integrator.order},
          {"tol", to_decimal(cert.integrator.tol)},
          {"width_cap", to_decimal(cert.integrator.width_cap)},
          {"subdivide", cert.integrator.subdivide}}},
        {"search",
         {{"scan_start", to_decimal(cert.search.scan_start)},
          {"scan_factor", to_decimal(cert.search.scan_factor)},
          {"max_iters", cert.search.max_iters}}},
    };
    return j.dump(2) + "\n";
}

}  // namespace stokes
