#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "psl/errors.hpp"
#include "psl/serialization.hpp"

using namespace psl;

namespace {

struct RunConfig {
    unsigned precision_bits = 128;
    unsigned max_escalations = 8;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    bool json = false;
};

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open input file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw InvalidInput("input is not valid JSON: " + std::string(e.what()));
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot open output file: " + path);
    out << text;
}

// Accepts "p/q", integers, and plain decimals like "0.7".
Rational parse_ratio(const std::string& text) {
    auto dot = text.find('.');
    if (dot == std::string::npos) return parse_rational(text);
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac_len = text.size() - dot - 1;
    Int den(1);
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    return make_rational(Int(digits), den);
}

EvalOptions eval_options(const RunConfig& cfg) {
    EvalOptions opt;
    opt.target_bits = cfg.precision_bits;
    opt.max_escalations = cfg.max_escalations;
    opt.threads = cfg.threads;
    return opt;
}

std::string theta0_display(const DecisionCertificate& cert) {
    if (cert.theta0_is_zero) return "0 (no outside conjugates)";
    RealInterval enc = abs_enclosure(*cert.theta0, 160);
    return format_decimal(enc.midpoint(), 12);
}

int cmd_classify(const std::string& input, const RunConfig& cfg) {
    auto alphas = alphas_from_json(read_json_file(input));
    auto nd = check_nondegenerate(alphas);
    auto classes = equiv_classes(alphas);
    std::vector<bool> pisot_flags;
    for (const auto& a : alphas) pisot_flags.push_back(is_pisot_number(a));

    Json out;
    out["nondegenerate"] = nd.nondegenerate;
    if (nd.witness)
        out["degeneracy_witness"] = Json{{"i", nd.witness->i},
                                         {"j", nd.witness->j},
                                         {"order", nd.witness->order}};
    out["classes"] = classes;
    out["pisot_number"] = pisot_flags;

    TupleClassification cls;
    bool have_cls = false;
    try {
        cls = classify_tuple(alphas);
        have_cls = true;
        const char* verdict = cls.verdict == TupleVerdict::pisot ? "pisot"
                              : cls.verdict == TupleVerdict::pseudo_pisot
                                  ? "pseudo_pisot"
                                  : "neither";
        Json jc{{"verdict", verdict},
                {"completed_sum", rational_to_string(cls.completed_sum)},
                {"extra_conjugate_count", cls.extra_conjugates.size()}};
        if (cls.failure == TupleClassification::Failure::sum_not_integer)
            jc["failing_condition"] = "sum_not_integer";
        if (cls.failure == TupleClassification::Failure::large_extra_conjugate) {
            jc["failing_condition"] = "large_extra_conjugate";
            jc["failing_conjugate"] = algebraic_to_json(*cls.failing_conjugate);
        }
        out["classification"] = jc;
    } catch (const InvalidInput& e) {
        out["classification"] = Json{{"error", e.what()}};
    }

    if (cfg.json) {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (nd.nondegenerate) {
        std::cout << "non-degenerate: true\n";
    } else {
        std::cout << "degenerate: ratio of entries " << nd.witness->i << " and "
                  << nd.witness->j << " is a root of unity of order "
                  << nd.witness->order << "\n";
    }
    std::cout << "equivalence classes:";
    for (const auto& cls_idx : classes) {
        std::cout << " {";
        for (size_t i = 0; i < cls_idx.size(); ++i)
            std::cout << (i ? "," : "") << cls_idx[i] + 1;
        std::cout << "}";
    }
    std::cout << "\n";
    for (size_t i = 0; i < alphas.size(); ++i)
        std::cout << "entry " << i + 1 << ": pisot number: "
                  << (pisot_flags[i] ? "true" : "false") << "\n";
    if (have_cls) {
        std::cout << "pseudo-pisot: ";
        if (cls.verdict == TupleVerdict::neither) {
            std::cout << "false";
            if (cls.failure == TupleClassification::Failure::sum_not_integer)
                std::cout << " (sum " << rational_to_string(cls.completed_sum)
                          << " not an integer)";
            else
                std::cout << " (outside conjugate with modulus >= 1: "
                          << cls.failing_conjugate->to_string() << ")";
            std::cout << "\n";
        } else {
            std::cout << "true (completed sum " << rational_to_string(cls.completed_sum)
                      << ")\n";
            std::cout << "pisot tuple: "
                      << (cls.verdict == TupleVerdict::pisot ? "true" : "false") << "\n";
        }
    }
    return 0;
}

int cmd_decide(const std::string& input, const std::string& out_path,
               const RunConfig& cfg) {
    auto alphas = alphas_from_json(read_json_file(input));
    std::vector<PowerSumTerm> ones;
    for (const auto& a : alphas)
        ones.push_back({AlgebraicNumber::from_rational(Rational(1)), a});
    auto [kept, dropped] = normalize_small_terms(make_power_sum_spec(std::move(ones)));

    if (kept.terms.empty()) {
        std::cout << "all entries have modulus < 1; the sum itself decays: exists "
                     "trivially\n";
        return 0;
    }
    DecisionCertificate cert = decide_existence(kept.alphas());
    Json j = certificate_to_json(cert);
    if (!dropped.empty()) {
        Json dj = Json::array();
        for (const auto& t : dropped) dj.push_back(algebraic_to_json(t.alpha));
        j["dropped_small_terms"] = dj;
    }
    if (!out_path.empty()) write_text_file(out_path, j.dump(2) + "\n");
    if (cfg.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "verdict: " << (cert.exists ? "exists" : "not_exists") << "\n";
        std::cout << "exponent m: " << cert.exponent_m << "\n";
        std::cout << "theta0 (per reduced index): " << theta0_display(cert) << "\n";
        if (!cert.theta0_is_zero && cert.exponent_m > 1) {
            // original-index decay rate is theta0^(1/m)
            RealInterval enc = abs_enclosure(*cert.theta0, 160);
            Real root(192);
            mpfr_rootn_ui(root.get(), enc.midpoint().get(),
                          static_cast<unsigned long>(cert.exponent_m), MPFR_RNDN);
            std::cout << "theta0^(1/m) (per original index): "
                      << format_decimal(root, 12) << "\n";
        }
        for (const auto& f : cert.failures) {
            std::cout << "failure: "
                      << (f.kind == DecisionCertificate::Failure::Kind::non_integral
                              ? "non_integral "
                              : "large_outside_conjugate ")
                      << f.witness.to_string() << "\n";
        }
        if (!dropped.empty())
            std::cout << "dropped " << dropped.size() << " term(s) with |alpha| < 1\n";
    }
    return cert.exists ? 0 : 1;
}

int cmd_trajectory(const std::string& input, unsigned long from, unsigned long to,
                   const std::string& theta_text, const std::string& csv_path,
                   const RunConfig& cfg) {
    PowerSumSpec spec = spec_from_json(read_json_file(input));
    std::optional<Rational> theta;
    if (!theta_text.empty()) theta = parse_ratio(theta_text);
    ScanReport rep = scan(spec, from, to, theta, eval_options(cfg));

    if (!csv_path.empty()) {
        std::ostringstream os;
        write_csv(rep, os);
        write_text_file(csv_path, os.str());
    }
    size_t undecided = 0;
    std::vector<unsigned long> members;
    for (const auto& row : rep.rows) {
        if (theta) {
            if (!row.in_member_set)
                ++undecided;
            else if (*row.in_member_set)
                members.push_back(row.sample.n);
        } else if (!row.sample.decided) {
            ++undecided;
        }
    }
    if (cfg.json) {
        Json j{{"from", from}, {"to", to}, {"undecided", undecided}};
        if (theta) {
            j["theta"] = rational_to_string(*theta);
            j["members"] = members;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        if (theta) {
            std::cout << "members of M_theta in [" << from << ", " << to << "]:";
            for (auto n : members) std::cout << " " << n;
            std::cout << "\n";
        }
        std::cout << "rows: " << rep.rows.size() << ", undecided: " << undecided << "\n";
        if (!csv_path.empty()) std::cout << "csv written to " << csv_path << "\n";
    }
    return undecided == rep.rows.size() ? 1 : 0;
}

int cmd_decompose(const std::string& input, const std::string& theta_text,
                  unsigned long scan_limit, const std::string& out_path,
                  const RunConfig& cfg) {
    Json j = read_json_file(input);
    RecurrenceSpec spec;
    if (j.is_object() && j.contains("terms") && !j.at("terms").empty() &&
        j.at("terms")[0].contains("coeffs")) {
        spec = recurrence_from_json(j);
    } else {
        // power-sum input with rational coefficients
        PowerSumSpec ps = spec_from_json(j);
        for (const auto& t : ps.terms) {
            auto q = t.q.rational_value();
            if (!q)
                throw InvalidInput(
                    "decompose accepts recurrence specs or power sums with "
                    "rational coefficients");
            spec.terms.push_back({{{*q}}, t.alpha});
        }
    }
    Rational theta = parse_ratio(theta_text);
    Decomposition dec = decompose(spec, theta, scan_limit, eval_options(cfg));
    Json out = decomposition_to_json(dec);
    if (!out_path.empty()) write_text_file(out_path, out.dump(2) + "\n");
    if (cfg.json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "certified: " << (dec.certified ? "true" : "false") << "\n";
        if (!dec.certified) std::cout << "reason: " << dec.failure_reason << "\n";
        std::cout << "threshold N*: " << dec.threshold << "\n";
        std::cout << "exceptional:";
        for (auto n : dec.exceptional) std::cout << " " << n;
        std::cout << "\nprogressions:";
        for (const auto& p : dec.progressions)
            std::cout << " (n == " << p.residue << " mod " << p.modulus << ")";
        std::cout << "\n";
        if (!dec.gaps.empty()) {
            std::cout << "progression gaps below threshold:";
            for (auto n : dec.gaps) std::cout << " " << n;
            std::cout << "\n";
        }
        if (!dec.boundary_undecided.empty()) {
            std::cout << "boundary cases (undecided):";
            for (auto n : dec.boundary_undecided) std::cout << " " << n;
            std::cout << "\n";
        }
    }
    return dec.certified ? 0 : 1;
}

int cmd_waring(unsigned kmax, const RunConfig& cfg) {
    auto rows = waring_check(kmax);
    if (cfg.json) {
        Json arr = Json::array();
        for (const auto& r : rows)
            arr.push_back(Json{{"k", r.k},
                               {"g", r.g.get_str()},
                               {"floor_term", r.floor_term.get_str()},
                               {"closest", r.closest.get_str()},
                               {"distance", rational_to_string(r.distance)}});
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    std::cout << "k\tg(k)\tfloor((3/2)^k)\t||(3/2)^k||\n";
    for (const auto& r : rows) {
        std::cout << r.k << "\t" << r.g.get_str() << "\t" << r.floor_term.get_str()
                  << "\t" << rational_to_string(r.distance) << "\n";
    }
    return 0;
}

int cmd_height(const std::string& input, const RunConfig& cfg) {
    Json j = read_json_file(input);
    AlgebraicNumber a;
    if (j.is_array() && j.size() == 1)
        a = algebraic_from_json(j[0]);
    else
        a = algebraic_from_json(j);
    HeightValue h = weil_height(a, cfg.precision_bits);
    if (cfg.json) {
        Json out{{"height", format_decimal(h.value.midpoint(), 30)},
                 {"error", format_decimal(h.value.width(), 4)},
                 {"exact_zero", h.exact_zero}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "weil height: " << format_decimal(h.value.midpoint(), 30)
                  << " (error < " << format_decimal(h.value.width(), 4) << ")\n";
        if (h.exact_zero) std::cout << "exactly zero (root of unity or +-1)\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"power-sum-lab: exact decision and verification toolkit for "
                 "integer approximation by power sums of algebraic numbers"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("POWER_SUM_LAB_PRECISION")) {
        try {
            cfg.precision_bits = static_cast<unsigned>(std::stoul(env));
        } catch (...) {
            std::cerr << "warning: ignoring malformed POWER_SUM_LAB_PRECISION\n";
        }
    }
    app.add_option("--precision-bits", cfg.precision_bits, "working precision in bits");
    app.add_option("--max-escalations", cfg.max_escalations,
                   "precision-doubling ceiling for undecided enclosures");
    app.add_option("--threads", cfg.threads, "scan parallelism");
    app.add_flag("--json", cfg.json, "machine-readable output");

    std::string input, out_path, csv_path, theta;
    unsigned long from = 1, to = 20, scan_limit = 200;
    unsigned kmax = 10;

    auto* classify = app.add_subcommand("classify", "non-degeneracy, classes, Pisot flags");
    classify->add_option("input", input, "JSON tuple of algebraic numbers")->required();

    auto* decide = app.add_subcommand("decide", "existence decision with certificate");
    decide->add_option("input", input, "JSON tuple or power-sum spec")->required();
    decide->add_option("--out", out_path, "write the certificate JSON here");

    auto* traj = app.add_subcommand("trajectory", "rigorous distance scan");
    traj->add_option("input", input, "JSON power-sum spec")->required();
    traj->add_option("--from", from, "first n");
    traj->add_option("--to", to, "last n");
    traj->add_option("--theta", theta, "membership threshold (p/q or decimal)");
    traj->add_option("--csv", csv_path, "write per-n samples as CSV");

    auto* dec = app.add_subcommand("decompose", "finite set + arithmetic progressions");
    dec->add_option("input", input, "JSON recurrence spec")->required();
    dec->add_option("--theta", theta, "theta tilde in (theta0, 1)")->required();
    dec->add_option("--scan-limit", scan_limit, "cross-check horizon");
    dec->add_option("--out", out_path, "write the decomposition JSON here");

    auto* war = app.add_subcommand("waring", "exact g(k) table");
    war->add_option("--kmax", kmax, "largest k (<= 64)");

    auto* hgt = app.add_subcommand("height", "absolute logarithmic Weil height");
    hgt->add_option("input", input, "JSON algebraic number")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return cmd_classify(input, cfg);
        if (decide->parsed()) return cmd_decide(input, out_path, cfg);
        if (traj->parsed()) return cmd_trajectory(input, from, to, theta, csv_path, cfg);
        if (dec->parsed()) return cmd_decompose(input, theta, scan_limit, out_path, cfg);
        if (war->parsed()) return cmd_waring(kmax, cfg);
        if (hgt->parsed()) return cmd_height(input, cfg);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const StructureError& e) {
        std::cerr << "structural error: " << e.what() << "\n";
        return 2;
    } catch (const DivisionByZero& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
