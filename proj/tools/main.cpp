#include <array>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "beauville/cones.hpp"
#include "beauville/search.hpp"
#include "beauville/serialize.hpp"
#include "beauville/version.hpp"

namespace {

using namespace beauville;

enum class Format { Text, Json, Csv };

struct GlobalOpts {
    Format format = Format::Text;
    std::string out_path;
    int jobs = 1;
};

const char* bool_text(bool b) {
    return b ? "true" : "false";
}

std::string matrix_text(const std::array<std::int64_t, 4>& m) {
    std::ostringstream os;
    os << "[[" << m[0] << ", " << m[1] << "], [" << m[2] << ", " << m[3] << "]]";
    return os.str();
}

std::string monomial_text(const Monomial& mon) {
    std::ostringstream os;
    os << "(" << mon.a << ", " << mon.b << ", " << mon.c << ")";
    return os.str();
}

Json tool_block() {
    Json t;
    t["name"] = kToolName;
    t["version"] = kToolVersion;
    return t;
}

std::string dump_json(const Json& j) {
    return j.dump(2) + "\n";
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw PreconditionViolated("cannot open output file: " + out_path);
    }
    out << payload;
}

// --- verify-theorem ---

struct CertEntry {
    Certificate cert;
    VerifyResult vr;
};

void write_certificate_text(std::ostream& os, const CertEntry& entry) {
    const Certificate& cert = entry.cert;
    os << "certificate n=" << cert.n << " m=" << cert.m << "\n";
    os << "  lambda = " << cert.lambda << "  mu = " << cert.mu << "\n";
    os << "  psi_std = " << matrix_text(cert.psi_std) << "\n";
    os << "  witness: deg_m = " << monomial_text(cert.deg_m)
       << "  deg_mprime = " << monomial_text(cert.deg_mprime)
       << "  direction = " << direction_name(cert.direction) << "\n";
    os << "  conditions:";
    bool all_units = true;
    for (const ConditionRecord& c : cert.seven_conditions) {
        os << " " << c.expr << "=" << c.value;
        all_units = all_units && c.is_unit;
    }
    os << (all_units ? "  [all units]" : "  [NOT ALL UNITS]") << "\n";
    os << "  h1_claimed = " << cert.h1_claimed
       << "  strategy = " << strategy_name(cert.strategy) << "\n";
    os << "  verification: " << (entry.vr.ok ? "ok" : "FAILED") << "\n";
    for (const std::string& reason : entry.vr.reasons) {
        os << "    reason: " << reason << "\n";
    }
}

int run_verify_theorem(std::int64_t n_value, std::int64_t m_value, const GlobalOpts& g,
                       std::string& payload) {
    const Modulus n(n_value);
    std::vector<std::int64_t> degrees;
    if (m_value >= 0) {
        degrees.push_back(m_value);
    } else {
        for (std::int64_t m = 1; m <= n_value - 4; ++m) {
            degrees.push_back(m);
        }
    }

    std::vector<CertEntry> entries;
    entries.reserve(degrees.size());
    bool all_ok = true;
    for (std::int64_t m : degrees) {
        CertEntry entry{find_witness(n, m), {}};
        entry.vr = verify_certificate(entry.cert);
        all_ok = all_ok && entry.vr.ok;
        entries.push_back(std::move(entry));
    }

    switch (g.format) {
        case Format::Text: {
            std::ostringstream os;
            os << "verify-theorem n=" << n_value << "\n";
            for (const CertEntry& entry : entries) {
                write_certificate_text(os, entry);
            }
            os << (all_ok ? "all certificates verified\n" : "verification FAILED\n");
            payload = os.str();
            break;
        }
        case Format::Json: {
            Json doc;
            doc["tool"] = tool_block();
            doc["n"] = n_value;
            Json results = Json::array();
            for (const CertEntry& entry : entries) {
                Json item;
                item["certificate"] = to_json(entry.cert);
                item["verification"] = to_json(entry.vr);
                results.push_back(std::move(item));
            }
            doc["results"] = std::move(results);
            doc["all_verified"] = all_ok;
            payload = dump_json(doc);
            break;
        }
        case Format::Csv: {
            std::ostringstream os;
            os << "n,m,lambda,mu,h1_claimed,strategy,verified\n";
            for (const CertEntry& entry : entries) {
                os << entry.cert.n << "," << entry.cert.m << "," << entry.cert.lambda
                   << "," << entry.cert.mu << "," << entry.cert.h1_claimed << ","
                   << strategy_name(entry.cert.strategy) << "," << bool_text(entry.vr.ok)
                   << "\n";
            }
            payload = os.str();
            break;
        }
    }
    return all_ok ? 0 : 1;
}

// --- search ---

int run_search(std::int64_t n_value, std::int64_t m, bool exhaustive, const GlobalOpts& g,
               std::string& payload) {
    const Modulus n(n_value);
    SearchReport report;
    if (exhaustive) {
        report = exhaustive_search(n, m, g.jobs);
    } else {
        const Certificate cert = find_witness(n, m);
        report.n = cert.n;
        report.m = cert.m;
        report.strategy = cert.strategy;
        report.found.push_back({cert.lambda, cert.mu, cert.h1_claimed});
    }

    switch (g.format) {
        case Format::Text: {
            std::ostringstream os;
            os << "search n=" << report.n << " m=" << report.m
               << " strategy=" << strategy_name(report.strategy)
               << " found=" << report.found.size() << "\n";
            os << "lambda mu h1\n";
            for (const SearchHit& hit : report.found) {
                os << hit.lambda << " " << hit.mu << " " << hit.h1 << "\n";
            }
            payload = os.str();
            break;
        }
        case Format::Json: {
            Json doc;
            doc["tool"] = tool_block();
            Json body = to_json(report);
            for (auto& [key, value] : body.items()) {
                doc[key] = value;
            }
            payload = dump_json(doc);
            break;
        }
        case Format::Csv: {
            std::ostringstream os;
            os << "lambda,mu,h1\n";
            for (const SearchHit& hit : report.found) {
                os << hit.lambda << "," << hit.mu << "," << hit.h1 << "\n";
            }
            payload = os.str();
            break;
        }
    }
    return 0;
}

// --- cohomology ---

int run_cohomology(std::int64_t n_value, std::int64_t lambda, std::int64_t mu,
                   std::int64_t m_from, std::int64_t m_to, const GlobalOpts& g,
                   std::string& payload) {
    const Modulus n(n_value);
    const SurfaceConfig cfg(n, GroupHom::diagonal(Residue(lambda, n), Residue(mu, n)));
    const std::int64_t to = m_to >= 0 ? m_to : cfg.r();
    if (m_from < 0 || to < m_from) {
        throw PreconditionViolated("cohomology needs 0 <= m-from <= m-to");
    }

    std::vector<CohomRow> rows;
    rows.reserve(static_cast<std::size_t>(to - m_from) + 1);
    for (std::int64_t m = m_from; m <= to; ++m) {
        rows.push_back(cohomology_row(m, cfg));
    }

    switch (g.format) {
        case Format::Text: {
            std::ostringstream os;
            os << "cohomology n=" << n_value << " lambda=" << lambda << " mu=" << mu
               << " r=" << cfg.r() << " free=" << bool_text(cfg.free()) << "\n";
            os << std::setw(5) << "m" << std::setw(5) << "h0" << std::setw(5) << "h1"
               << std::setw(5) << "h2" << std::setw(6) << "chi" << "\n";
            for (const CohomRow& row : rows) {
                os << std::setw(5) << row.m << std::setw(5) << row.h0 << std::setw(5)
                   << row.h1 << std::setw(5) << row.h2 << std::setw(6) << row.chi << "\n";
            }
            payload = os.str();
            break;
        }
        case Format::Json: {
            Json doc;
            doc["tool"] = tool_block();
            doc["n"] = n_value;
            doc["lambda"] = lambda;
            doc["mu"] = mu;
            doc["free"] = cfg.free();
            doc["rows"] = to_json(rows);
            payload = dump_json(doc);
            break;
        }
        case Format::Csv: {
            std::ostringstream os;
            os << "m,h0,h1,h2,chi\n";
            for (const CohomRow& row : rows) {
                os << row.m << "," << row.h0 << "," << row.h1 << "," << row.h2 << ","
                   << row.chi << "\n";
            }
            payload = os.str();
            break;
        }
    }
    return 0;
}

// --- cone ---

void write_cone_text(std::ostream& os, const std::string& label, const ConeReport& rep) {
    os << "cone" << (label.empty() ? "" : " " + label) << " d=" << rep.d
       << " dualizing_order=" << rep.dualizing_order
       << " gorenstein_hint=" << bool_text(rep.gorenstein_hint) << "\n";
    os << "  hilbert:";
    for (std::int64_t h : rep.hilbert) {
        os << " " << h;
    }
    os << "\n";
    if (rep.cm.cohen_macaulay) {
        os << "  verdict: CohenMacaulay\n";
    } else {
        os << "  verdict: NotCM, offenders:";
        for (const ConeOffender& o : rep.cm.offenders) {
            os << " (m=" << o.m << ", h1=" << o.h1 << ")";
        }
        os << "\n";
    }
}

void write_cone_csv(std::ostream& os, const ConeReport& rep) {
    for (std::size_t i = 0; i < rep.hilbert.size(); ++i) {
        os << rep.d << "," << i << "," << rep.hilbert[i] << "\n";
    }
}

int run_cone(std::int64_t n_value, std::int64_t lambda, std::int64_t mu, std::int64_t d,
             std::int64_t t, std::int64_t max_index, bool three_cones,
             const GlobalOpts& g, std::string& payload) {
    const Modulus n(n_value);
    const SurfaceConfig cfg(n, GroupHom::diagonal(Residue(lambda, n), Residue(mu, n)));
    const std::int64_t degree = t > 0 ? t : d;

    bool failed = false;
    std::ostringstream text;
    std::ostringstream csv;
    Json doc;
    doc["tool"] = tool_block();
    doc["n"] = n_value;
    doc["lambda"] = lambda;
    doc["mu"] = mu;

    text << "surface n=" << n_value << " lambda=" << lambda << " mu=" << mu
         << " r=" << cfg.r() << "\n";
    csv << "d,i,h0\n";

    if (three_cones) {
        const ThreeCones cones = three_cones_report(cfg, max_index);
        // Z and X sit outside the nonvanishing window, so NotCM there means
        // an internal inconsistency.
        failed = !cones.z.cm.cohen_macaulay || !cones.x.cm.cohen_macaulay;
        write_cone_text(text, "y", cones.y);
        write_cone_text(text, "z", cones.z);
        write_cone_text(text, "x", cones.x);
        write_cone_csv(csv, cones.y);
        write_cone_csv(csv, cones.z);
        write_cone_csv(csv, cones.x);
        doc["cones"] = to_json(cones);
    } else {
        const ConeReport rep = cone_report(cfg, degree, max_index);
        failed = degree >= cfg.r() && !rep.cm.cohen_macaulay;
        write_cone_text(text, "", rep);
        write_cone_csv(csv, rep);
        doc["cone"] = to_json(rep);
    }

    switch (g.format) {
        case Format::Text:
            payload = text.str();
            break;
        case Format::Json:
            payload = dump_json(doc);
            break;
        case Format::Csv:
            payload = csv.str();
            break;
    }
    return failed ? 1 : 0;
}

// --- beauville5 ---

void write_beauville5_rows_csv(std::ostream& os, const std::vector<Beauville5Row>& rows) {
    for (const Beauville5Row& row : rows) {
        os << row.psi_std[0] << "," << row.psi_std[1] << "," << row.psi_std[2] << ","
           << row.psi_std[3] << "," << row.q << "," << row.h0_l << "," << row.h1_l
           << "," << row.h2_l << "\n";
    }
}

int run_beauville5(const GlobalOpts& g, std::string& payload) {
    const Beauville5Report report = beauville5_report(g.jobs);

    switch (g.format) {
        case Format::Text: {
            std::ostringstream os;
            os << "beauville5 total=" << report.total_matrices
               << " free=" << report.free_count
               << " diagonal_free=" << report.diagonal_free_count << "\n";
            os << "numerics: L^2=" << report.numerics.Lsq << " K^2=" << report.numerics.Ksq
               << " chi_O=" << report.numerics.chiO << " r=" << report.numerics.r << "\n";
            os << "q=0 rows (" << report.q0_rows.size() << "):\n";
            for (const Beauville5Row& row : report.q0_rows) {
                os << "  psi_std=" << matrix_text(row.psi_std) << " q=" << row.q
                   << " h0_l=" << row.h0_l << " h1_l=" << row.h1_l << " h2_l=" << row.h2_l
                   << "\n";
            }
            os << "q>0 rows (" << report.q_positive_rows.size() << "):\n";
            for (const Beauville5Row& row : report.q_positive_rows) {
                os << "  psi_std=" << matrix_text(row.psi_std) << " q=" << row.q
                   << " h0_l=" << row.h0_l << " h1_l=" << row.h1_l << " h2_l=" << row.h2_l
                   << "\n";
            }
            os << "vanishing_verified = " << bool_text(report.vanishing_verified) << "\n";
            payload = os.str();
            break;
        }
        case Format::Json: {
            Json doc;
            doc["tool"] = tool_block();
            Json body = to_json(report);
            for (auto& [key, value] : body.items()) {
                doc[key] = value;
            }
            payload = dump_json(doc);
            break;
        }
        case Format::Csv: {
            std::ostringstream os;
            os << "psi_a,psi_b,psi_c,psi_d,q,h0_l,h1_l,h2_l\n";
            write_beauville5_rows_csv(os, report.q0_rows);
            write_beauville5_rows_csv(os, report.q_positive_rows);
            payload = os.str();
            break;
        }
    }
    return report.vanishing_verified ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Beauville-type surfaces from Fermat curves: equivariant cohomology of"
                 " subcanonical divisors, freeness certificates, graded-cone reports"};
    app.require_subcommand(1);

    GlobalOpts g;
    const std::map<std::string, Format> format_map{
        {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
    app.add_option("--format", g.format, "Output format: text, json, or csv")
        ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case));
    app.add_option("--out", g.out_path, "Write output to this file instead of stdout");
    app.add_option("--jobs", g.jobs, "Worker thread count for sweeps")
        ->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand(
        "verify-theorem", "Emit and re-check h1 witness certificates over Z/n");
    std::int64_t vt_n = 0;
    std::int64_t vt_m = -1;
    verify_cmd->add_option("--n", vt_n, "Fermat degree n")->required();
    verify_cmd->add_option("--m", vt_m, "Single twist degree m (default: all of 1..n-4)");
    verify_cmd->fallthrough();

    auto* search_cmd = app.add_subcommand(
        "search", "Search unit pairs (lambda, mu) giving free actions with h1(mL) != 0");
    std::int64_t se_n = 0;
    std::int64_t se_m = 0;
    bool se_exhaustive = false;
    search_cmd->add_option("--n", se_n, "Fermat degree n")->required();
    search_cmd->add_option("--m", se_m, "Twist degree m")->required();
    search_cmd->add_flag("--exhaustive", se_exhaustive,
                         "Sweep every unit pair instead of the direct construction");
    search_cmd->fallthrough();

    auto* cohom_cmd = app.add_subcommand(
        "cohomology", "Tabulate h0/h1/h2(S, mL) for a diagonal configuration");
    std::int64_t co_n = 0;
    std::int64_t co_lambda = 0;
    std::int64_t co_mu = 0;
    std::int64_t co_from = 0;
    std::int64_t co_to = -1;
    cohom_cmd->add_option("--n", co_n, "Fermat degree n")->required();
    cohom_cmd->add_option("--lambda", co_lambda, "Diagonal entry lambda")->required();
    cohom_cmd->add_option("--mu", co_mu, "Diagonal entry mu")->required();
    cohom_cmd->add_option("--m-from", co_from, "First twist degree (default 0)");
    cohom_cmd->add_option("--m-to", co_to, "Last twist degree (default r = n-3)");
    cohom_cmd->fallthrough();

    auto* cone_cmd = app.add_subcommand(
        "cone", "Hilbert function and Cohen-Macaulay verdict of a graded cone");
    std::int64_t cn_n = 0;
    std::int64_t cn_lambda = 0;
    std::int64_t cn_mu = 0;
    std::int64_t cn_d = 1;
    std::int64_t cn_t = 0;
    std::int64_t cn_max_index = 12;
    bool cn_three = false;
    cone_cmd->add_option("--n", cn_n, "Fermat degree n")->required();
    cone_cmd->add_option("--lambda", cn_lambda, "Diagonal entry lambda")->required();
    cone_cmd->add_option("--mu", cn_mu, "Diagonal entry mu")->required();
    auto* d_opt = cone_cmd->add_option("--d", cn_d, "Polarization degree (cone over dL)")
                      ->check(CLI::PositiveNumber);
    auto* t_opt = cone_cmd->add_option("--t", cn_t, "Alias for --d")
                      ->check(CLI::PositiveNumber);
    d_opt->excludes(t_opt);
    t_opt->excludes(d_opt);
    cone_cmd->add_option("--max-index", cn_max_index, "Last Hilbert index (default 12)")
        ->check(CLI::NonNegativeNumber);
    cone_cmd->add_flag("--three-cones", cn_three,
                       "Report the cones over L, rL, and (r+1)L together");
    cone_cmd->fallthrough();

    auto* b5_cmd = app.add_subcommand(
        "beauville5", "Enumerate all psi matrices mod 5 and check h1(L) = 0 on q=0 rows");
    b5_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::string payload;
    int code = 0;
    try {
        if (*verify_cmd) {
            code = run_verify_theorem(vt_n, vt_m, g, payload);
        } else if (*search_cmd) {
            code = run_search(se_n, se_m, se_exhaustive, g, payload);
        } else if (*cohom_cmd) {
            code = run_cohomology(co_n, co_lambda, co_mu, co_from, co_to, g, payload);
        } else if (*cone_cmd) {
            code = run_cone(cn_n, cn_lambda, cn_mu, cn_d, cn_t, cn_max_index, cn_three, g,
                            payload);
        } else if (*b5_cmd) {
            code = run_beauville5(g, payload);
        }
        emit(payload, g.out_path);
    } catch (const PreconditionViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotAUnit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DegreeOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}
