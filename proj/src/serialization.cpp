#include "psl/serialization.hpp"

#include "psl/errors.hpp"

namespace psl {
namespace {

Json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw InvalidInput("expected an integer or integer string");
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InvalidInput("expected a rational as \"p/q\" or an integer");
}

Json interval_to_json(const RatInterval& iv) {
    return Json::array({rational_to_string(iv.lo), rational_to_string(iv.hi)});
}

RatInterval interval_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw InvalidInput("interval must be a [lo, hi] pair");
    return RatInterval(rational_from_json(j[0]), rational_from_json(j[1]));
}

}  // namespace

Json algebraic_to_json(const AlgebraicNumber& a) {
    if (auto r = a.rational_value())
        return Json{{"rational", rational_to_string(*r)}};
    Json root{{"re", interval_to_json(a.box().re)}, {"im", interval_to_json(a.box().im)}};
    Json coeffs = Json::array();
    for (const auto& c : a.minpoly().coeffs()) coeffs.push_back(int_to_json(c));
    return Json{{"minpoly", coeffs}, {"root", root}};
}

AlgebraicNumber algebraic_from_json(const Json& j) {
    if (j.is_number_integer() || j.is_string())
        return AlgebraicNumber::from_rational(rational_from_json(j));
    if (!j.is_object()) throw InvalidInput("algebraic number must be an object");
    if (j.contains("rational"))
        return AlgebraicNumber::from_rational(rational_from_json(j.at("rational")));
    if (!j.contains("minpoly"))
        throw InvalidInput("algebraic number needs \"minpoly\" or \"rational\"");
    std::vector<Int> coeffs;
    for (const auto& c : j.at("minpoly")) coeffs.push_back(int_from_json(c));
    IntPoly p(std::move(coeffs));
    if (p.degree() == 1 && !j.contains("root")) {
        Rational r(-p[0], p[1]);
        r.canonicalize();
        return AlgebraicNumber::from_rational(r);
    }
    if (!j.contains("root"))
        throw InvalidInput("algebraic inputs of degree > 1 must carry a root box");
    const Json& root = j.at("root");
    ComplexBox box(interval_from_json(root.at("re")), interval_from_json(root.at("im")));
    return AlgebraicNumber::from_minpoly_box(p, box);
}

Json spec_to_json(const PowerSumSpec& spec) {
    Json terms = Json::array();
    for (const auto& t : spec.terms)
        terms.push_back(Json{{"q", algebraic_to_json(t.q)},
                             {"alpha", algebraic_to_json(t.alpha)}});
    return Json{{"terms", terms}};
}

PowerSumSpec spec_from_json(const Json& j) {
    std::vector<PowerSumTerm> terms;
    if (j.is_array()) {
        for (const auto& a : j)
            terms.push_back({AlgebraicNumber::from_rational(Rational(1)),
                             algebraic_from_json(a)});
        return make_power_sum_spec(std::move(terms));
    }
    if (j.is_object() && j.contains("terms")) {
        for (const auto& t : j.at("terms"))
            terms.push_back({algebraic_from_json(t.at("q")),
                             algebraic_from_json(t.at("alpha"))});
        return make_power_sum_spec(std::move(terms));
    }
    if (j.is_object() && j.contains("alphas")) {
        for (const auto& a : j.at("alphas"))
            terms.push_back({AlgebraicNumber::from_rational(Rational(1)),
                             algebraic_from_json(a)});
        return make_power_sum_spec(std::move(terms));
    }
    throw InvalidInput("expected a power-sum spec: {\"terms\": ...}, "
                       "{\"alphas\": ...}, or an array of algebraic numbers");
}

std::vector<AlgebraicNumber> alphas_from_json(const Json& j) {
    const Json* arr = nullptr;
    if (j.is_array()) arr = &j;
    else if (j.is_object() && j.contains("alphas")) arr = &j.at("alphas");
    if (arr) {
        std::vector<AlgebraicNumber> out;
        for (const auto& a : *arr) out.push_back(algebraic_from_json(a));
        if (out.empty()) throw InvalidInput("tuple must be nonempty");
        return out;
    }
    return spec_from_json(j).alphas();
}

Json budget_to_json(const SublinearBudget& b) {
    Json out{{"c", rational_to_string(b.c)}};
    if (b.form == SublinearBudget::Form::power) {
        out["form"] = "power";
        out["e"] = rational_to_string(b.e);
    } else {
        out["form"] = "log_shaved";
    }
    return out;
}

SublinearBudget budget_from_json(const Json& j) {
    const std::string form = j.at("form").get<std::string>();
    Rational c = rational_from_json(j.at("c"));
    if (form == "power") return SublinearBudget::power(c, rational_from_json(j.at("e")));
    if (form == "log_shaved") return SublinearBudget::log_shaved(c);
    throw InvalidInput("budget form must be \"power\" or \"log_shaved\"");
}

Json certificate_to_json(const DecisionCertificate& cert) {
    Json theta0;
    if (cert.theta0_is_zero) {
        theta0 = Json{{"zero", true}};
    } else {
        RealInterval enc = abs_enclosure(*cert.theta0, 160);
        theta0 = Json{{"zero", false},
                      {"decimal", format_decimal(enc.midpoint(), 24)},
                      {"error", format_decimal(enc.width(), 4)},
                      {"number", algebraic_to_json(*cert.theta0)}};
    }
    Json reduced = Json::array();
    for (const auto& a : cert.reduced_alphas) reduced.push_back(algebraic_to_json(a));
    Json classes = Json::array();
    for (const auto& cls : cert.partition.classes)
        classes.push_back(Json{{"members", cls.class_size()},
                               {"conjugates", cls.conjugate_count()}});
    Json failures = Json::array();
    for (const auto& f : cert.failures)
        failures.push_back(Json{
            {"kind", f.kind == DecisionCertificate::Failure::Kind::non_integral
                         ? "non_integral"
                         : "large_outside_conjugate"},
            {"witness", algebraic_to_json(f.witness)}});
    return Json{{"verdict", cert.exists ? "exists" : "not_exists"},
                {"m", cert.exponent_m},
                {"theta0", theta0},
                {"reduced_alphas", reduced},
                {"classes", classes},
                {"extra_conjugates", cert.extra_conjugate_count},
                {"failures", failures}};
}

DecisionCertificate certificate_from_json(const Json& j) {
    DecisionCertificate cert;
    cert.exists = j.at("verdict").get<std::string>() == "exists";
    cert.exponent_m = j.at("m").get<unsigned long>();
    for (const auto& a : j.at("reduced_alphas"))
        cert.reduced_alphas.push_back(algebraic_from_json(a));
    cert.extra_conjugate_count = j.at("extra_conjugates").get<size_t>();
    const Json& t0 = j.at("theta0");
    cert.theta0_is_zero = t0.at("zero").get<bool>();
    if (!cert.theta0_is_zero) cert.theta0 = algebraic_from_json(t0.at("number"));
    for (const auto& f : j.at("failures")) {
        DecisionCertificate::Failure fail{
            f.at("kind").get<std::string>() == "non_integral"
                ? DecisionCertificate::Failure::Kind::non_integral
                : DecisionCertificate::Failure::Kind::large_outside_conjugate,
            algebraic_from_json(f.at("witness"))};
        cert.failures.push_back(std::move(fail));
    }
    if (!cert.reduced_alphas.empty()) {
        std::vector<PowerSumTerm> ones;
        for (const auto& a : cert.reduced_alphas)
            ones.push_back({AlgebraicNumber::from_rational(Rational(1)), a});
        cert.partition = build_partition(make_power_sum_spec(std::move(ones)));
    }
    return cert;
}

Json decomposition_to_json(const Decomposition& d) {
    Json progs = Json::array();
    for (const auto& p : d.progressions)
        progs.push_back(Json{{"residue", p.residue}, {"modulus", p.modulus}});
    return Json{{"theta_tilde", rational_to_string(d.theta_tilde)},
                {"threshold", d.threshold},
                {"exceptional", d.exceptional},
                {"progressions", progs},
                {"certified", d.certified},
                {"gaps", d.gaps},
                {"preperiod", d.preperiod},
                {"period", d.period},
                {"scan_limit", d.scan_limit},
                {"boundary_undecided", d.boundary_undecided},
                {"failure_reason", d.failure_reason}};
}

Decomposition decomposition_from_json(const Json& j) {
    Decomposition d;
    d.theta_tilde = rational_from_json(j.at("theta_tilde"));
    d.threshold = j.at("threshold").get<unsigned long>();
    d.exceptional = j.at("exceptional").get<std::vector<unsigned long>>();
    for (const auto& p : j.at("progressions"))
        d.progressions.push_back({p.at("residue").get<unsigned long>(),
                                  p.at("modulus").get<unsigned long>()});
    d.certified = j.at("certified").get<bool>();
    d.gaps = j.value("gaps", std::vector<unsigned long>{});
    d.preperiod = j.value("preperiod", 0ul);
    d.period = j.value("period", 1ul);
    d.scan_limit = j.value("scan_limit", 0ul);
    d.boundary_undecided = j.value("boundary_undecided", std::vector<unsigned long>{});
    d.failure_reason = j.value("failure_reason", std::string{});
    return d;
}

RecurrenceSpec recurrence_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("terms"))
        throw InvalidInput("recurrence spec needs {\"terms\": [...]}");
    RecurrenceSpec spec;
    for (const auto& t : j.at("terms")) {
        RecurrenceTerm term;
        term.alpha = algebraic_from_json(t.at("alpha"));
        for (const auto& c : t.at("coeffs")) {
            if (c.is_array()) {
                std::vector<Rational> v;
                for (const auto& e : c) v.push_back(rational_from_json(e));
                term.q_coeffs.push_back(std::move(v));
            } else {
                term.q_coeffs.push_back({rational_from_json(c)});
            }
        }
        spec.terms.push_back(std::move(term));
    }
    return spec;
}

Json recurrence_to_json(const RecurrenceSpec& spec) {
    Json terms = Json::array();
    for (const auto& t : spec.terms) {
        Json coeffs = Json::array();
        for (const auto& v : t.q_coeffs) {
            Json vec = Json::array();
            for (const auto& c : v) vec.push_back(rational_to_string(c));
            coeffs.push_back(vec);
        }
        terms.push_back(Json{{"coeffs", coeffs}, {"alpha", algebraic_to_json(t.alpha)}});
    }
    return Json{{"terms", terms}};
}

} // namespace psl
