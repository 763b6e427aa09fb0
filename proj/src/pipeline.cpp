#include "lrs2mc/pipeline.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "lrs2mc/io.hpp"
#include "lrs2mc/selftest.hpp"

namespace lrs2mc {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void require_inputs(const PipelineConfig& cfg, std::size_t n, const char* what) {
    if (cfg.inputs.size() != n)
        throw input_error(std::string(what) + ": expected " + std::to_string(n) +
                          " input path(s), got " + std::to_string(cfg.inputs.size()));
}

// First index with a negative term, scanning the component's prefix and its
// initial window; nullopt when every scanned term is nonnegative.
std::optional<std::size_t> first_negative(const std::vector<Rational>& terms) {
    for (std::size_t n = 0; n < terms.size(); ++n)
        if (terms[n].sign() < 0) return n;
    return std::nullopt;
}

int cmd_reduce(const PipelineConfig& cfg, std::ostream& out) {
    require_inputs(cfg, 1, "reduce");
    if (cfg.out.empty()) throw input_error("reduce: --out directory is required");
    const Lrs source = read_lrs_file(cfg.inputs[0]);
    fs::create_directories(cfg.out);

    const std::vector<SmlComponent> components = sml_decompose(source);
    const std::size_t period = components.empty() ? 1 : components.front().stride;
    out << "input: order " << source.order() << ", query " << query_kind_to_string(cfg.query)
        << ", decomposition period " << period << "\n";

    json manifest{{"input", lrs_to_json(source)},
                  {"query", query_kind_to_string(cfg.query)},
                  {"period", period},
                  {"horizon", cfg.horizon},
                  {"window_cap", cfg.window_cap},
                  {"components", json::array()}};
    bool verification_failed = false;

    for (const SmlComponent& comp : components) {
        const std::string tag = "component_" + std::to_string(comp.offset);
        json entry{{"offset", comp.offset},
                   {"stride", comp.stride},
                   {"order", comp.component.order()},
                   {"identically_zero", comp.identically_zero}};

        if (comp.identically_zero) {
            entry["status"] = "identically-zero";
            entry["note"] =
                cfg.query == QueryKind::Equal
                    ? "every term of this progression is zero, so the probability equals the "
                      "threshold at every step along it"
                    : "every term of this progression is zero; it contributes no "
                      "below-threshold step";
            out << tag << ": identically zero (no instance emitted)\n";
            manifest["components"].push_back(std::move(entry));
            continue;
        }

        const std::size_t t = find_nonzero_window(comp.component, cfg.window_cap);
        entry["window_shift"] = t;
        const std::vector<Rational> prefix =
            eval_range(comp.component, t + comp.component.order() - 1);

        if (cfg.query == QueryKind::Equal) {
            json zeros = json::array();
            for (std::size_t n = 0; n < t; ++n)
                if (prefix[n].is_zero()) zeros.push_back(n * comp.stride + comp.offset);
            if (!zeros.empty()) {
                entry["prefix_zeros"] = zeros;
                entry["note"] =
                    "zero terms found while locating a nonzero window; each listed source index "
                    "is already an equality witness (the instance covers the shifted tail)";
            }
        } else {
            if (const auto neg = first_negative(prefix)) {
                const std::size_t source_index = *neg * comp.stride + comp.offset;
                if (cfg.query == QueryKind::Less) {
                    entry["status"] = "short-circuit";
                    entry["negative_term_at"] = source_index;
                    entry["note"] = "term at source index " + std::to_string(source_index) +
                                    " is negative, which answers the below-threshold query "
                                    "affirmatively without a reduction";
                    out << tag << ": short-circuit (negative term at source index "
                        << source_index << ")\n";
                } else {
                    entry["status"] = "not-reduced";
                    entry["negative_term_at"] = source_index;
                    entry["note"] =
                        "term at source index " + std::to_string(source_index) +
                        " is negative; the reduction requires strictly positive initial terms, "
                        "and finitely many negative terms do not by themselves decide the "
                        "infinitely-often query";
                    out << tag << ": not reduced (negative term at source index " << source_index
                        << "; see manifest note)\n";
                }
                manifest["components"].push_back(std::move(entry));
                continue;
            }
        }

        const Lrs shifted = shift(comp.component, t);
        const auto [inst, cert] = build_instance(shifted, cfg.query);
        const VerificationReport report = verify_certificate(shifted, inst, cert, cfg.horizon);
        const ErgodicityReport erg =
            check_ergodicity(inst.matrix, wielandt_bound(inst.matrix.rows()));

        write_json_file((fs::path(cfg.out) / (tag + ".lrs.json")).string(), lrs_to_json(shifted));
        write_json_file((fs::path(cfg.out) / (tag + ".instance.json")).string(),
                        instance_to_json(inst));
        write_json_file((fs::path(cfg.out) / (tag + ".certificate.json")).string(),
                        certificate_to_json(cert, shifted));
        write_json_file((fs::path(cfg.out) / (tag + ".report.json")).string(),
                        report_to_json(report));
        {
            std::string text = report_to_text(report);
            text += erg.ergodic ? "ergodicity witness: N = " + std::to_string(erg.witness) + "\n"
                                : "ergodicity: " + erg.failure + "\n";
            std::ofstream f(fs::path(cfg.out) / (tag + ".report.txt"));
            if (!f) throw input_error("cannot write report for " + tag);
            f << text;
        }

        entry["status"] = "reduced";
        entry["index_map"] =
            "instance step n corresponds to source index (n + window_shift) * stride + offset";
        entry["files"] = json{{"lrs", tag + ".lrs.json"},
                              {"instance", tag + ".instance.json"},
                              {"certificate", tag + ".certificate.json"},
                              {"report", tag + ".report.json"}};
        entry["dimension"] = inst.matrix.rows();
        entry["verification"] = report.overall ? "pass" : "fail";
        entry["ergodicity_witness"] = erg.witness;
        manifest["components"].push_back(std::move(entry));

        out << tag << ": " << inst.matrix.rows() << "x" << inst.matrix.rows()
            << " instance, threshold " << inst.threshold.to_string() << ", verification "
            << (report.overall ? "pass" : "FAIL") << ", ergodic with N = " << erg.witness << "\n";
        if (!report.overall) verification_failed = true;
    }

    write_json_file((fs::path(cfg.out) / "manifest.json").string(), manifest);
    out << "wrote " << (fs::path(cfg.out) / "manifest.json").string() << "\n";
    return verification_failed ? 1 : 0;
}

int cmd_verify(const PipelineConfig& cfg, std::ostream& out) {
    require_inputs(cfg, 2, "verify (instance file, certificate file)");
    const MarkovInstance inst = instance_from_json(read_json_file(cfg.inputs[0]));
    const auto [cert, source] = certificate_from_json(read_json_file(cfg.inputs[1]));
    const VerificationReport report = verify_certificate(source, inst, cert, cfg.horizon);
    out << report_to_text(report);
    if (!cfg.out.empty()) write_json_file(cfg.out, report_to_json(report));
    return report.overall ? 0 : 1;
}

int cmd_eval(const PipelineConfig& cfg, std::ostream& out) {
    require_inputs(cfg, 1, "eval");
    const Lrs l = read_lrs_file(cfg.inputs[0]);
    const std::vector<Rational> terms = eval_range(l, cfg.horizon);
    for (std::size_t n = 0; n < terms.size(); ++n)
        out << "u_" << n << " = " << terms[n].to_string() << "\n";
    if (!cfg.out.empty()) {
        json jterms = json::array();
        for (const Rational& r : terms) jterms.push_back(rational_to_json(r));
        write_json_file(cfg.out, json{{"terms", std::move(jterms)}});
    }
    return 0;
}

int cmd_decompose(const PipelineConfig& cfg, std::ostream& out) {
    require_inputs(cfg, 1, "decompose");
    const Lrs l = read_lrs_file(cfg.inputs[0]);
    const std::vector<SmlComponent> components = sml_decompose(l);
    const std::size_t period = components.empty() ? 1 : components.front().stride;
    out << "period L = " << period << " (" << components.size() << " component"
        << (components.size() == 1 ? "" : "s") << ")\n";
    json jcomps = json::array();
    for (const SmlComponent& comp : components) {
        const std::vector<Rational> first = eval_range(comp.component, 9);
        out << "offset " << comp.offset << " (stride " << comp.stride << "): order "
            << comp.component.order()
            << ", identically zero: " << (comp.identically_zero ? "yes" : "no")
            << ", non-degenerate: " << (comp.nondegenerate ? "yes" : "no") << "\n  terms:";
        for (const Rational& r : first) out << " " << r.to_string();
        out << "\n";
        json jterms = json::array();
        for (const Rational& r : first) jterms.push_back(rational_to_json(r));
        jcomps.push_back(json{{"offset", comp.offset},
                              {"stride", comp.stride},
                              {"order", comp.component.order()},
                              {"identically_zero", comp.identically_zero},
                              {"nondegenerate", comp.nondegenerate},
                              {"first_terms", std::move(jterms)},
                              {"lrs", lrs_to_json(comp.component)}});
    }
    if (!cfg.out.empty())
        write_json_file(cfg.out, json{{"period", period}, {"components", std::move(jcomps)}});
    return 0;
}

int cmd_reverse(const PipelineConfig& cfg, std::ostream& out) {
    require_inputs(cfg, 1, "reverse");
    const MarkovInstance inst = instance_from_json(read_json_file(cfg.inputs[0]));
    const auto [l, start] = reverse_reduce(inst.matrix, inst.target, inst.source, inst.threshold);
    const bool infinite_eq =
        decide_infinite_equality(inst.matrix, inst.target, inst.source, inst.threshold);
    out << "difference sequence v_n = m_ij^(n) - r: order " << l.order() << " recurrence"
        << ", start shift " << start << "\n";
    out << "equality holds infinitely often: " << (infinite_eq ? "yes" : "no") << "\n";
    const json result{{"lrs", lrs_to_json(l)},
                      {"start_shift", start},
                      {"infinitely_often_equal", infinite_eq}};
    if (!cfg.out.empty()) write_json_file(cfg.out, result);
    else out << result.dump(2) << "\n";
    return 0;
}

int cmd_scan(const PipelineConfig& cfg, std::ostream& out) {
    require_inputs(cfg, 1, "scan");
    const MarkovInstance inst = instance_from_json(read_json_file(cfg.inputs[0]));
    const QueryScanResult result = query_scan(inst, cfg.horizon);
    const std::string query = query_kind_to_string(inst.query);
    if (inst.query == QueryKind::InfinitelyOftenLess) {
        out << "hits for " << query << " with n <= " << cfg.horizon << ":";
        for (std::size_t n : result.hits) out << " " << n;
        if (result.hits.empty()) out << " none";
        out << "\n(diagnostic only: a bounded scan cannot decide an infinitely-often query)\n";
    } else if (result.witness) {
        out << "witness: n = " << *result.witness << " satisfies the " << query << " query\n";
    } else {
        out << "no witness for n <= " << cfg.horizon
            << " (decides nothing: a witness may exist beyond the horizon)\n";
    }
    if (!cfg.out.empty()) {
        json jout{{"query", query}, {"horizon", cfg.horizon}};
        jout["witness"] = result.witness ? json(*result.witness) : json();
        json hits = json::array();
        for (std::size_t n : result.hits) hits.push_back(n);
        jout["hits"] = std::move(hits);
        write_json_file(cfg.out, jout);
    }
    return 0;
}

int cmd_selftest(const PipelineConfig& cfg, std::ostream& out) {
    const SelftestSummary summary = run_selftest(cfg.seed);
    out << "selftest with seed " << cfg.seed << "\n";
    for (const SuiteResult& s : summary.suites) {
        out << (s.pass ? "[PASS] " : "[FAIL] ") << s.name << " (" << s.cases << " cases)";
        if (!s.pass) out << ": " << s.detail;
        out << "\n";
    }
    out << "selftest: " << (summary.all_pass ? "PASS" : "FAIL") << " (" << summary.suites.size()
        << " suites)\n";
    return summary.all_pass ? 0 : 1;
}

}  // namespace

int run_command(const PipelineConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.horizon < 1) throw input_error("--horizon must be at least 1");
        if (cfg.window_cap < 1) throw input_error("--window-cap must be at least 1");
        switch (cfg.command) {
            case PipelineConfig::Command::Reduce: return cmd_reduce(cfg, out);
            case PipelineConfig::Command::Verify: return cmd_verify(cfg, out);
            case PipelineConfig::Command::Eval: return cmd_eval(cfg, out);
            case PipelineConfig::Command::Decompose: return cmd_decompose(cfg, out);
            case PipelineConfig::Command::Reverse: return cmd_reverse(cfg, out);
            case PipelineConfig::Command::Scan: return cmd_scan(cfg, out);
            case PipelineConfig::Command::Selftest: return cmd_selftest(cfg, out);
        }
        throw std::logic_error("run_command: unknown command");
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace lrs2mc
