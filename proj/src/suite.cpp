#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "tatezeta/errors.hpp"
#include "tatezeta/ortho.hpp"
#include "tatezeta/rootfind.hpp"
#include "tatezeta/sturm.hpp"
#include "tatezeta/verify.hpp"
#include "tatezeta/weil.hpp"
#include "tatezeta/zeta_numeric.hpp"

namespace tatezeta {

namespace {

std::vector<std::pair<int, int>> grid_pairs(const RunConfig& cfg) {
    std::vector<std::pair<int, int>> pairs;
    for (int m = 0; m <= cfg.m_max; ++m) {
        for (int k = 0; k <= m; ++k) {
            if (cfg.k_filter) {
                bool keep = false;
                for (int kf : *cfg.k_filter) keep = keep || kf == k;
                if (!keep) continue;
            }
            pairs.emplace_back(m, k);
        }
    }
    return pairs;
}

void run_weil_suite(const RunConfig& cfg, std::vector<NamedCheck>& out) {
    const int bound = cfg.weil_degree_bound;
    auto record = [&out](const std::string& name, auto&& fn) {
        NamedCheck c;
        c.name = name;
        try {
            c.pass = fn();
        } catch (const Error& e) {
            c.pass = false;
            c.note = e.what();
        }
        out.push_back(std::move(c));
    };

    record("ladder", [bound] {
        for (int m = 0; m <= bound; ++m)
            for (int n = 0; m + n <= bound; ++n) ladder_check(m, n);
        return true;
    });
    record("commutators", [bound] {
        using G = SU2Generator;
        return commutator_check(G::R, G::J, bound) && commutator_check(G::J, G::K, bound) &&
               commutator_check(G::K, G::R, bound) && commutator_check(G::J, G::J, bound);
    });
    record("subspace_invariance", [bound] {
        for (int m = 0; m <= bound; ++m) subspace_invariance_check(m);
        return true;
    });
    record("harmonic_oscillator", [bound] {
        for (int m = 0; m <= bound; ++m)
            for (int n = 0; m + n <= bound; ++n) harmonic_oscillator_check(m, n);
        return true;
    });
    record("rotation_eigen", [bound] {
        for (int m = 0; m <= bound; ++m)
            for (int n = -m; n <= m; n += 2) rotation_eigen_check(m, n);
        return true;
    });
    record("membership", [bound] {
        for (int m = 0; m <= bound; ++m)
            for (int n = -m; n <= m; n += 2) membership_check(m, n);
        return true;
    });
    record("intertwining", [bound] { return intertwining_check(bound); });
    record("fourier_fourth_power", [bound] {
        for (int m = 0; m <= bound; ++m)
            for (int n = 0; m + n <= bound; ++n) {
                HermGaussFn f = hermite_fn(m, n);
                HermGaussFn g = fourier_transform(
                    fourier_transform(fourier_transform(fourier_transform(f))));
                if (g != f) throw IdentityViolated("fourier^4 != id");
            }
        return true;
    });
}

void run_ortho_suite(const RunConfig& cfg, std::vector<NamedCheck>& out) {
    OrthoChecker checker(static_cast<mpfr_prec_t>(cfg.precision_bits));
    int m_cap = std::min(cfg.m_max, cfg.ortho_m_max);
    for (int k = 0; k <= 3; ++k) {
        for (int m = k; m <= m_cap; m += 2) {
            for (int m2 = m; m2 <= m_cap; m2 += 2) {
                NamedCheck c;
                c.name = "ortho k=" + std::to_string(k) + " m=" + std::to_string(m) +
                         " m'=" + std::to_string(m2);
                try {
                    OrthoResult res = checker.check(m, m2, k, cfg.ortho_tol);
                    c.pass = res.pass;
                    if (m != m2) {
                        BigFloat denom = sqrt(res.norm_sq_a * res.norm_sq_b);
                        c.residual = (abs(res.cross) / denom).to_double();
                    } else {
                        c.residual = 0.0;
                        if (!res.pass) c.note = "diagonal not positive";
                    }
                } catch (const Error& e) {
                    c.pass = false;
                    c.note = e.what();
                }
                out.push_back(std::move(c));
            }
        }
    }
}

void run_ratio_suite(const RunConfig& cfg, std::vector<NamedCheck>& out,
                     std::map<std::pair<int, int>, double>& spreads) {
    ZetaNumeric oracle(static_cast<mpfr_prec_t>(cfg.precision_bits));
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(cfg.precision_bits);
    std::vector<BigComplex> samples;
    for (const char* s : {"1", "5/4", "3/2", "2", "3"})
        samples.emplace_back(BigFloat(rational_from_string(s), prec), BigFloat(0.0, prec));

    int m_cap = std::min(cfg.m_max, cfg.ratio_m_max);
    for (int m = 0; m <= m_cap; ++m) {
        for (int k = m % 2; k <= m; k += 2) {
            NamedCheck c;
            c.name = "ratio f(" + std::to_string(m) + ",0) k=" + std::to_string(k);
            try {
                auto ratios = oracle.ratio_scan(hermite_fn(m, 0), m, k, samples);
                c.residual = ZetaNumeric::relative_spread(ratios);
                c.pass = c.residual <= cfg.ratio_tol;
                spreads[{m, k}] = c.residual;
            } catch (const Error& e) {
                c.pass = false;
                c.note = e.what();
            }
            out.push_back(std::move(c));
        }
    }

    // Random elements of the invariant subspaces, built in the rotation
    // eigenbasis with a guaranteed nonzero contributing component.
    std::mt19937_64 rng(cfg.seed);
    for (int t = 0; t < cfg.ratio_random_elements; ++t) {
        int k = static_cast<int>(rng() % 4);
        int d_max = (std::min(cfg.ratio_m_max, cfg.m_max) - k) / 2;
        if (d_max < 0) break;
        int d = static_cast<int>(rng() % static_cast<unsigned long>(d_max + 1));
        int m = k + 2 * d;
        HermGaussFn f = bmn_fn(m, -k);
        f *= GaussianRational(Rational(1 + static_cast<long>(rng() % 5)),
                              Rational(static_cast<long>(rng() % 3)));
        for (int extra = 0; extra < 2; ++extra) {
            int n = -m + 2 * static_cast<int>(rng() % static_cast<unsigned long>(m + 1));
            if (n == -k) continue;
            HermGaussFn g = bmn_fn(m, n);
            g *= GaussianRational(Rational(static_cast<long>(rng() % 7) - 3),
                                  Rational(static_cast<long>(rng() % 5) - 2));
            f += g;
        }
        NamedCheck c;
        c.name = "ratio random W_" + std::to_string(m) + " k=" + std::to_string(k) + " #" +
                 std::to_string(t);
        try {
            auto ratios = oracle.ratio_scan(f, m, k, samples);
            c.residual = ZetaNumeric::relative_spread(ratios);
            c.pass = c.residual <= cfg.ratio_tol;
        } catch (const Error& e) {
            c.pass = false;
            c.note = e.what();
        }
        out.push_back(std::move(c));
    }
}

}  // namespace

SuiteResult run_suite(const RunConfig& cfg) {
    if (cfg.m_max < 0 || cfg.precision_bits < 64 || cfg.jobs < 1)
        throw DomainError("run_suite: invalid config (need m_max >= 0, precision >= 64, jobs >= 1)");

    SuiteResult suite;
    suite.config = cfg;

    auto pairs = grid_pairs(cfg);
    suite.reports.resize(pairs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= pairs.size()) break;
            suite.reports[i] = lrh_verify(pairs[i].first, pairs[i].second);
        }
    };
    int jobs = std::min<int>(cfg.jobs, static_cast<int>(pairs.size()) + 1);
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int i = 0; i < jobs; ++i) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    // Grid order is already (m, k)-sorted; reports land by index, so the
    // output is independent of worker scheduling.

    run_weil_suite(cfg, suite.weil_checks);
    run_ortho_suite(cfg, suite.ortho_checks);
    std::map<std::pair<int, int>, double> ratio_spreads;
    run_ratio_suite(cfg, suite.ratio_checks, ratio_spreads);
    for (auto& r : suite.reports) {
        auto it = ratio_spreads.find({r.m, r.k});
        if (it != ratio_spreads.end()) r.numeric_residuals["ratio_spread"] = it->second;
    }

    bool ok = true;
    for (const auto& r : suite.reports) {
        ok = ok && r.passed();
        if (r.vacuous)
            ++suite.vacuous_count;
        else if (r.lrh_certified)
            ++suite.certified_count;
    }
    for (const auto* list : {&suite.weil_checks, &suite.ortho_checks, &suite.ratio_checks})
        for (const auto& c : *list) ok = ok && c.pass;
    suite.all_pass = ok;
    return suite;
}

namespace {

nlohmann::json report_json(const VerifyReport& r) {
    nlohmann::json j;
    j["m"] = r.m;
    j["k"] = r.k;
    j["vacuous"] = r.vacuous;
    if (!r.vacuous) {
        j["degree"] = r.degree;
        j["route_agreement"] = r.route_agreement;
        j["functional_eq"] = r.functional_eq;
        j["symmetry"] = r.symmetry;
        j["sturm_real_roots"] = r.sturm_real_roots;
        j["distinct"] = r.distinct;
        j["lrh_certified"] = r.lrh_certified;
    }
    if (!r.numeric_residuals.empty()) j["numeric_residuals"] = r.numeric_residuals;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

nlohmann::json check_json(const NamedCheck& c) {
    nlohmann::json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["residual"] = c.residual;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

std::string format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
        default: return "text";
    }
}

}  // namespace

std::string to_json(const SuiteResult& suite) {
    nlohmann::json j;
    j["config"] = {{"m_max", suite.config.m_max},
                   {"precision_bits", suite.config.precision_bits},
                   {"weil_degree_bound", suite.config.weil_degree_bound},
                   {"seed", suite.config.seed},
                   {"ratio_tol", suite.config.ratio_tol},
                   {"ortho_tol", suite.config.ortho_tol},
                   {"format", format_name(suite.config.format)}};
    if (suite.config.k_filter) j["config"]["k_filter"] = *suite.config.k_filter;
    j["reports"] = nlohmann::json::array();
    for (const auto& r : suite.reports) j["reports"].push_back(report_json(r));
    j["weil"] = nlohmann::json::array();
    for (const auto& c : suite.weil_checks) j["weil"].push_back(check_json(c));
    j["orthogonality"] = nlohmann::json::array();
    for (const auto& c : suite.ortho_checks) j["orthogonality"].push_back(check_json(c));
    j["ratio"] = nlohmann::json::array();
    for (const auto& c : suite.ratio_checks) j["ratio"].push_back(check_json(c));
    j["summary"] = {{"all_pass", suite.all_pass},
                    {"certified", suite.certified_count},
                    {"vacuous", suite.vacuous_count},
                    {"reports", suite.reports.size()}};
    return j.dump(2) + "\n";
}

std::string to_csv(const SuiteResult& suite) {
    std::ostringstream os;
    os << "type,m,k,degree,vacuous,route_agreement,functional_eq,symmetry,"
          "sturm_real_roots,distinct,lrh_certified,name,pass,residual,note\n";
    for (const auto& r : suite.reports) {
        os << "report," << r.m << ',' << r.k << ',' << r.degree << ',' << r.vacuous << ','
           << r.route_agreement << ',' << r.functional_eq << ',' << r.symmetry << ','
           << r.sturm_real_roots << ',' << r.distinct << ',' << r.lrh_certified << ",,,,\""
           << r.note << "\"\n";
    }
    auto emit_checks = [&os](const char* type, const std::vector<NamedCheck>& list) {
        for (const auto& c : list) {
            std::ostringstream res;
            res.precision(17);
            res << c.residual;
            os << type << ",,,,,,,,,,," << '"' << c.name << "\"," << c.pass << ',' << res.str()
               << ",\"" << c.note << "\"\n";
        }
    };
    emit_checks("weil", suite.weil_checks);
    emit_checks("ortho", suite.ortho_checks);
    emit_checks("ratio", suite.ratio_checks);
    os << "summary,,,,,,,,,,,all_pass," << suite.all_pass << ",,\n";
    return os.str();
}

std::string to_text(const SuiteResult& suite) {
    std::ostringstream os;
    for (const auto& r : suite.reports) {
        os << "(m=" << r.m << ", k=" << r.k << ") ";
        if (r.vacuous) {
            os << (r.note.empty() ? "vacuous (identically zero)" : "vacuous FAILED: " + r.note);
        } else {
            os << "deg=" << r.degree << " routes=" << (r.route_agreement ? "ok" : "FAIL")
               << " feq=" << (r.functional_eq ? "ok" : "FAIL")
               << " sym=" << (r.symmetry ? "ok" : "FAIL") << " roots=" << r.sturm_real_roots
               << "/" << r.degree << (r.distinct ? " distinct" : " NOT-distinct")
               << (r.lrh_certified ? " CERTIFIED" : " NOT-CERTIFIED");
            if (!r.note.empty()) os << "  [" << r.note << "]";
        }
        os << '\n';
    }
    auto emit_checks = [&os](const char* title, const std::vector<NamedCheck>& list) {
        if (list.empty()) return;
        os << title << ":\n";
        for (const auto& c : list) {
            os << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL");
            if (c.residual != 0.0) {
                std::ostringstream res;
                res.precision(3);
                res << std::scientific << c.residual;
                os << " (residual " << res.str() << ")";
            }
            if (!c.note.empty()) os << " [" << c.note << "]";
            os << '\n';
        }
    };
    emit_checks("weil identities", suite.weil_checks);
    emit_checks("orthogonality", suite.ortho_checks);
    emit_checks("zeta ratio scans", suite.ratio_checks);
    os << "summary: " << (suite.all_pass ? "ALL PASS" : "FAILURES PRESENT") << " ("
       << suite.certified_count << " certified, " << suite.vacuous_count << " vacuous, "
       << suite.reports.size() << " reports)\n";
    return os.str();
}

namespace {

std::vector<std::string> root_ordinates(const ZetaPolyRecord& rec) {
    std::vector<std::string> out;
    if (rec.is_zero || rec.degree == 0) return out;
    RatPoly rho = critical_line_restriction(rec.coeffs);
    auto roots = root_find(rho, 192);
    std::vector<BigFloat> ts;
    ts.reserve(roots.size());
    for (const auto& r : roots) ts.push_back(r.root.re);  // certified real
    std::sort(ts.begin(), ts.end());
    const BigFloat snap = BigFloat::from_string("1e-25", 192);
    for (auto& t : ts) {
        if (abs(t) < snap) t = BigFloat(0.0, 192);  // avoid "-0.000..."
        out.push_back(t.to_fixed(30));
    }
    return out;
}

}  // namespace

std::string export_table(const std::vector<ZetaPolyRecord>& records, OutputFormat format) {
    if (records.empty()) throw DomainError("export_table: no records");
    if (format == OutputFormat::csv) {
        std::ostringstream os;
        os << "m,k,degree,coeffs,root_ordinates,normalization\n";
        for (const auto& rec : records) {
            os << rec.m << ',' << rec.k << ',' << (rec.is_zero ? 0 : rec.degree) << ",\"";
            if (rec.is_zero) {
                os << "0";
            } else {
                for (int i = 0; i <= rec.coeffs.degree(); ++i)
                    os << (i ? ";" : "") << to_string(rec.coeffs.coeff(static_cast<std::size_t>(i)));
            }
            os << "\",\"";
            auto ts = root_ordinates(rec);
            for (std::size_t i = 0; i < ts.size(); ++i) os << (i ? ";" : "") << ts[i];
            os << "\",primitive-positive-leading\n";
        }
        return os.str();
    }
    // text falls back to json: the table is the canonical artifact.
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rec : records) {
        nlohmann::json j;
        j["m"] = rec.m;
        j["k"] = rec.k;
        j["degree"] = rec.is_zero ? 0 : rec.degree;
        std::vector<std::string> coeffs;
        if (rec.is_zero) {
            coeffs.push_back("0");
        } else {
            for (int i = 0; i <= rec.coeffs.degree(); ++i)
                coeffs.push_back(to_string(rec.coeffs.coeff(static_cast<std::size_t>(i))));
        }
        j["coeffs"] = coeffs;
        nlohmann::json roots = nlohmann::json::array();
        for (const auto& t : root_ordinates(rec)) roots.push_back({{"im", t}, {"re", "0.5"}});
        j["roots"] = roots;
        j["normalization"] = "primitive-positive-leading";
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

void export_table_file(const std::vector<ZetaPolyRecord>& records, const std::string& path,
                       OutputFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("export_table: cannot open " + path);
    out << export_table(records, format);
    if (!out) throw Error("export_table: write failed for " + path);
}

}  // namespace tatezeta
