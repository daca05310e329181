// Command-line front end: single-state criterion checks, family scans to
// CSV, the verification report, and state printing. Exit codes: 0 ran,
// 1 verification failure, 2 usage or id error.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "entmom/acceptance.hpp"
#include "entmom/detect.hpp"
#include "entmom/errors.hpp"
#include "entmom/matrix_io.hpp"
#include "entmom/states.hpp"
#include "entmom/threshold.hpp"

namespace {

using namespace entmom;
using nlohmann::json;

std::size_t parse_party(const std::string& s, std::size_t parties) {
    std::size_t party = parties;
    if (s.size() == 1 && s[0] >= 'A' && s[0] <= 'C')
        party = static_cast<std::size_t>(s[0] - 'A');
    else if (s.size() == 1 && s[0] >= 'a' && s[0] <= 'c')
        party = static_cast<std::size_t>(s[0] - 'a');
    else if (s.size() == 1 && s[0] >= '0' && s[0] <= '9')
        party = static_cast<std::size_t>(s[0] - '0');
    else
        throw BadParty("cannot parse party '" + s + "' (use A/B/C or an index)");
    if (party >= parties)
        throw BadParty("party '" + s + "' out of range for a " + std::to_string(parties) +
                       "-party state");
    return party;
}

std::string party_name(std::size_t party) {
    return std::string(1, static_cast<char>('A' + party));
}

std::string fmt_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string fmt_e(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

std::string dims_string(const Dims& dims) {
    std::string s;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i)
            s += "x";
        s += std::to_string(dims[i]);
    }
    return s;
}

// ---------------------------------------------------------------- check

void print_verdict_line(const CriterionVerdict& v) {
    std::printf("  %-11s witness %s  %s", v.criterion.c_str(), fmt_g(v.witness_value).c_str(),
                v.detected ? "DETECTED" : (v.boundary ? "boundary" : "not detected"));
    if (!v.parameters.empty()) {
        std::printf("  (");
        for (std::size_t i = 0; i < v.parameters.size(); ++i)
            std::printf("%s%s=%s", i ? ", " : "", v.parameters[i].first.c_str(),
                        fmt_g(v.parameters[i].second).c_str());
        std::printf(")");
    }
    std::printf("\n");
}

json verdict_to_json(const CriterionVerdict& v) {
    json params = json::object();
    for (const auto& [key, value] : v.parameters)
        params[key] = value;
    return {{"criterion", v.criterion},
            {"witness", v.witness_value},
            {"detected", v.detected},
            {"boundary", v.boundary},
            {"parameters", params}};
}

int cmd_check(const std::string& state_id, const std::string& map_id,
              const std::string& party_str, std::size_t n, bool normalize, bool json_out) {
    const DensityMatrix rho = make_state(state_id);
    const std::size_t party = parse_party(party_str, rho.parties());
    const SignedKrausMap map = make_map(map_id, rho.dims()[party]);

    const DetectionResult det = evaluate_detection(rho, map, party, n, normalize);
    const PtResult pt = evaluate_pt(rho, party, n);
    const OracleReport oracle = oracle_report(rho, map, party, n);
    const PositivityWitness positivity = sampled_positivity(map, 1000, 424242);

    std::optional<MomentSequence> tripartite;
    std::string tripartite_error;
    if (rho.parties() == 3 && rho.dims()[0] == map.in_dim && rho.dims()[1] == map.in_dim &&
        rho.dims()[2] == map.in_dim) {
        try {
            tripartite = tripartite_moments(rho, map, n, normalize);
        } catch (const NegativeGeometricMeanInput& e) {
            tripartite_error = e.what();
        }
    }

    if (json_out) {
        json out;
        out["state"] = state_id;
        out["dims"] = rho.dims();
        out["map"] = map.name;
        out["party"] = party;
        out["n"] = n;
        out["normalized"] = normalize;
        out["mapped_trace"] = det.mapped_trace;
        out["moments"] = det.q.values;
        json hankel = {{"s1_min_eig", det.hankel.min_eig_s1},
                       {"s2_min_eig", det.hankel.min_eig_s2}};
        if (det.hankel.minors) {
            json minors = json::object();
            for (std::size_t i = 0; i < det.hankel.minors->values.size(); ++i)
                minors[MinorResiduals::kNames[i]] = det.hankel.minors->values[i];
            hankel["minor_residuals"] = minors;
        }
        out["hankel"] = hankel;
        json criteria = json::array();
        criteria.push_back(verdict_to_json(det.hankel_verdict));
        if (det.q3_lambda_verdict)
            criteria.push_back(verdict_to_json(*det.q3_lambda_verdict));
        if (det.q3_optimal_verdict)
            criteria.push_back(verdict_to_json(*det.q3_optimal_verdict));
        criteria.push_back(verdict_to_json(pt.p3_verdict));
        criteria.push_back(verdict_to_json(pt.p3_oppt_verdict));
        out["criteria"] = criteria;
        json oracle_json;
        oracle_json["ppt_min_eig_per_party"] = oracle.ppt.min_eig_per_party;
        oracle_json["npt"] = oracle.ppt.npt;
        oracle_json["mapped_spectrum"] = oracle.mapped.eigenvalues;
        oracle_json["consistent"] = det.consistent;
        oracle_json["notes"] = oracle.notes;
        if (!std::isnan(oracle.realignment_trace_norm))
            oracle_json["realignment_trace_norm"] = oracle.realignment_trace_norm;
        if (!oracle.realignment_moments.empty()) {
            std::vector<double> re, im;
            for (const Complex& c : oracle.realignment_moments) {
                re.push_back(c.real());
                im.push_back(c.imag());
            }
            oracle_json["realignment_moments_re"] = re;
            oracle_json["realignment_moments_im"] = im;
        }
        out["oracle"] = oracle_json;
        out["map_positivity"] = {{"positive", positivity.positive},
                                 {"worst_eigenvalue", positivity.worst_eigenvalue},
                                 {"trials", positivity.trials}};
        if (tripartite)
            out["tripartite_moments"] = tripartite->values;
        if (!tripartite_error.empty())
            out["tripartite_error"] = tripartite_error;
        if (state_id == "upb_tiles" && map.in_dim == 3)
            out["closed_form_s1_reference"] = -9.0 / (4.0 * (301.0 + std::sqrt(91177.0)));
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::printf("state: %s  dims %s\n", state_id.c_str(), dims_string(rho.dims()).c_str());
    std::printf("map: %s  party %s  moments n=%zu  (%s, mapped trace %s)\n", map.name.c_str(),
                party_name(party).c_str(), n, normalize ? "normalized" : "unnormalized",
                fmt_g(det.mapped_trace).c_str());
    std::printf("map positivity (%zu samples): %s, worst eigenvalue %s\n", positivity.trials,
                positivity.positive ? "ok" : "FLAGGED NOT POSITIVE",
                fmt_g(positivity.worst_eigenvalue).c_str());
    std::printf("q:");
    for (double v : det.q.values)
        std::printf(" %s", fmt_g(v).c_str());
    std::printf("\n");
    std::printf("S1 min eigenvalue %s   S2 min eigenvalue %s\n",
                fmt_g(det.hankel.min_eig_s1).c_str(), fmt_g(det.hankel.min_eig_s2).c_str());
    if (state_id == "upb_tiles" && map.in_dim == 3) {
        const double reference = -9.0 / (4.0 * (301.0 + std::sqrt(91177.0)));
        std::printf("closed-form S1 reference %s  |S1 min - reference| = %s\n",
                    fmt_g(reference).c_str(),
                    fmt_g(std::abs(det.hankel.min_eig_s1 - reference)).c_str());
    }
    if (det.hankel.minors) {
        std::printf("minor residuals:");
        for (std::size_t i = 0; i < det.hankel.minors->values.size(); ++i)
            std::printf(" %s=%s", MinorResiduals::kNames[i],
                        fmt_g(det.hankel.minors->values[i]).c_str());
        std::printf("\n");
    }
    std::printf("criteria:\n");
    print_verdict_line(det.hankel_verdict);
    if (det.q3_lambda_verdict)
        print_verdict_line(*det.q3_lambda_verdict);
    if (det.q3_optimal_verdict)
        print_verdict_line(*det.q3_optimal_verdict);
    else if (!det.q3_optimal_error.empty())
        std::printf("  %-11s %s\n", "q3-olambda", det.q3_optimal_error.c_str());
    print_verdict_line(pt.p3_verdict);
    print_verdict_line(pt.p3_oppt_verdict);
    std::printf("oracle:\n");
    std::printf("  partial transpose min eigenvalue:");
    for (std::size_t p = 0; p < oracle.ppt.min_eig_per_party.size(); ++p)
        std::printf(" %s %s", party_name(p).c_str(),
                    fmt_g(oracle.ppt.min_eig_per_party[p]).c_str());
    std::printf("  -> %s\n", oracle.ppt.npt ? "NPT" : "PPT");
    std::printf("  mapped spectrum:");
    for (double v : oracle.mapped.eigenvalues)
        std::printf(" %s", fmt_g(v).c_str());
    std::printf("\n");
    if (!std::isnan(oracle.realignment_trace_norm))
        std::printf("  realignment trace norm: %s\n",
                    fmt_g(oracle.realignment_trace_norm).c_str());
    if (!oracle.realignment_moments.empty()) {
        std::printf("  realignment moments:");
        for (const Complex& c : oracle.realignment_moments)
            std::printf(" %s%s%sj", fmt_g(c.real()).c_str(), c.imag() >= 0.0 ? "+" : "",
                        fmt_g(c.imag()).c_str());
        std::printf("\n");
    }
    for (const auto& note : oracle.notes)
        std::printf("  note: %s\n", note.c_str());
    if (tripartite) {
        std::printf("  tripartite geometric-mean moments:");
        for (double v : tripartite->values)
            std::printf(" %s", fmt_g(v).c_str());
        std::printf("\n");
    }
    if (!tripartite_error.empty())
        std::printf("  tripartite geometric-mean moments: %s\n", tripartite_error.c_str());
    std::printf("  consistency (PSD mapped spectrum => PSD Hankel): %s\n",
                det.consistent ? "ok" : "VIOLATED");
    return 0;
}

// ----------------------------------------------------------------- scan

struct ScanConfig {
    std::string family;
    double lo = 0.0;
    double hi = 1.0;
    std::size_t points = 2;
    std::vector<std::string> maps;
    std::string party = "B";
    std::size_t n = 5;
    bool normalize = true;
    std::string out;
    std::size_t jobs = 1;
    std::string refine;  // column name; empty = no refinement
};

const std::vector<std::string> kScanColumns = {
    "min_eig_s1",         "min_eig_s2",        "q3_minus_q2sq", "q3_olambda_witness",
    "p3_oppt_witness",    "oracle_min_mapped_eig", "ppt_min_eig"};

void validate_scan_config(const ScanConfig& cfg) {
    if (cfg.family.empty())
        throw UnknownId("scan needs a state family");
    if (!(cfg.lo < cfg.hi))
        throw DomainError("scan range needs lo < hi");
    if (cfg.points < 2)
        throw DomainError("scan needs at least 2 grid points");
    if (cfg.n < 5)
        throw DomainError("scan needs at least 5 moments");
    if (cfg.maps.empty())
        throw UnknownId("scan needs at least one map id");
    if (cfg.out.empty())
        throw DomainError("scan needs an output path");
    if (cfg.jobs < 1)
        throw DomainError("--jobs must be >= 1");
    if (!cfg.refine.empty()) {
        bool known = false;
        for (const auto& c : kScanColumns)
            known = known || c == cfg.refine;
        if (!known)
            throw UnknownId("unknown refine column '" + cfg.refine + "'");
    }
    FamilyParam probe(cfg.family, (cfg.lo + cfg.hi) / 2.0);  // validates family and range
    (void)probe;
}

struct ScanCell {
    std::map<std::string, double> columns;
};

ScanCell scan_cell(const ScanConfig& cfg, double param, const std::string& map_id) {
    const DensityMatrix rho = make_state(FamilyParam(cfg.family, param));
    const std::size_t party = parse_party(cfg.party, rho.parties());
    const SignedKrausMap map = make_map(map_id, rho.dims()[party]);
    const DetectionResult det = evaluate_detection(rho, map, party, cfg.n, cfg.normalize);
    const PtResult pt = evaluate_pt(rho, party, cfg.n);

    ScanCell cell;
    cell.columns["min_eig_s1"] = det.hankel.min_eig_s1;
    cell.columns["min_eig_s2"] = det.hankel.min_eig_s2;
    cell.columns["q3_minus_q2sq"] = det.q.m(3) - det.q.m(2) * det.q.m(2);
    cell.columns["q3_olambda_witness"] =
        det.q3_optimal_verdict ? det.q3_optimal_verdict->witness_value : std::nan("");
    cell.columns["p3_oppt_witness"] = pt.p3_oppt_verdict.witness_value;
    cell.columns["oracle_min_mapped_eig"] = det.mapped.min();
    cell.columns["ppt_min_eig"] = pt.min_pt_eig;
    return cell;
}

int cmd_scan(const ScanConfig& cfg) {
    validate_scan_config(cfg);
    const std::vector<double> grid = linspace(cfg.lo, cfg.hi, cfg.points);

    // one row string per (grid point, map), computed in parallel but written
    // in parameter order
    std::vector<std::vector<std::string>> rows(grid.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::string> errors(grid.size());
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= grid.size())
                return;
            try {
                for (const auto& map_id : cfg.maps) {
                    const ScanCell cell = scan_cell(cfg, grid[i], map_id);
                    std::string row = fmt_g(grid[i]) + "," + map_id + "," +
                                      map_convention(map_id);
                    for (const auto& col : kScanColumns)
                        row += "," + fmt_e(cell.columns.at(col));
                    rows[i].push_back(std::move(row));
                }
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const std::size_t jobs = std::min(cfg.jobs, grid.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t + 1 < jobs; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    for (const auto& err : errors)
        if (!err.empty())
            throw Error(err);

    const std::string tmp = cfg.out + ".tmp";
    {
        std::ofstream os(tmp, std::ios::trunc);
        if (!os)
            throw Error("cannot open '" + tmp + "' for writing");
        os << "param,map,convention";
        for (const auto& col : kScanColumns)
            os << "," << col;
        os << "\n";
        for (const auto& point_rows : rows)
            for (const auto& row : point_rows)
                os << row << "\n";
        if (!os) {
            os.close();
            std::remove(tmp.c_str());
            throw Error("write to '" + tmp + "' failed");
        }
    }
    if (std::rename(tmp.c_str(), cfg.out.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw Error("cannot rename '" + tmp + "' to '" + cfg.out + "'");
    }
    std::printf("wrote %zu rows to %s\n", grid.size() * cfg.maps.size(), cfg.out.c_str());

    if (!cfg.refine.empty()) {
        for (const auto& map_id : cfg.maps) {
            auto witness = [&](double param) {
                return scan_cell(cfg, param, map_id).columns.at(cfg.refine);
            };
            // first adjacent sign change on the grid, then bisection
            bool refined = false;
            double prev = witness(grid[0]);
            for (std::size_t i = 1; i < grid.size() && !refined; ++i) {
                const double cur = witness(grid[i]);
                if (std::isfinite(prev) && std::isfinite(cur) &&
                    (prev < 0.0) != (cur < 0.0)) {
                    const double root =
                        bisect_threshold(witness, grid[i - 1], grid[i], 1e-6);
                    std::printf("refine map=%s column=%s threshold=%.8f\n", map_id.c_str(),
                                cfg.refine.c_str(), root);
                    refined = true;
                }
                prev = cur;
            }
            if (!refined)
                std::printf("refine map=%s column=%s threshold=none (no sign change)\n",
                            map_id.c_str(), cfg.refine.c_str());
        }
    }
    return 0;
}

// --------------------------------------------------------------- report

int cmd_report(bool corrupt_sigma_b) {
    AcceptanceOptions options;
    options.corrupt_sigma_b = corrupt_sigma_b;
    const auto results = run_acceptance(options);
    for (const auto& r : results)
        std::printf("%s\n", format_acceptance_line(r).c_str());

    // side-by-side convention comparison for the PPT families: the unordered
    // construction equals Tr(X)I - X, whose output on a PPT state is PSD, so
    // only the ordered variant can produce negative Hankel values here
    std::printf("\nconvention comparison (informational):\n");
    struct Probe {
        const char* label;
        DensityMatrix rho;
        std::size_t d;
    };
    const std::vector<Probe> probes = {{"sigma_b(0.5)", sigma_b(0.5), 4},
                                       {"sigma_a(0.5)", sigma_a(0.5), 3},
                                       {"upb_tiles", upb_tiles(), 3}};
    for (const auto& probe : probes) {
        for (const char* conv : {"unordered", "ordered"}) {
            const std::string id = "hou:" + std::to_string(probe.d) + ":" + conv;
            const DensityMatrix& rho = probe.rho;
            const SignedKrausMap map = make_map(id, probe.d);
            const DetectionResult det = evaluate_detection(rho, map, 1, 5, true);
            std::printf("  %-12s %-16s mapped min eig %-15s S1 min %-15s S2 min %s\n",
                        probe.label, id.c_str(), fmt_g(det.mapped.min()).c_str(),
                        fmt_g(det.hankel.min_eig_s1).c_str(),
                        fmt_g(det.hankel.min_eig_s2).c_str());
        }
    }

    const bool ok = all_passed(results);
    std::printf("\n%s (%zu items)\n", ok ? "ALL PASS" : "FAILURES PRESENT", results.size());
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------- state

int cmd_state(const std::string& state_id, const std::string& out_path) {
    const DensityMatrix rho = make_state(state_id);
    if (out_path.empty()) {
        write_matrix(std::cout, rho.matrix(), rho.dims());
        return 0;
    }
    std::ofstream os(out_path, std::ios::trunc);
    if (!os)
        throw Error("cannot open '" + out_path + "' for writing");
    write_matrix(os, rho.matrix(), rho.dims());
    return 0;
}

void load_scan_config_json(const std::string& path, ScanConfig& cfg) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open config file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error("config file '" + path + "': " + e.what());
    }
    if (j.contains("family"))
        cfg.family = j["family"].get<std::string>();
    if (j.contains("lo"))
        cfg.lo = j["lo"].get<double>();
    if (j.contains("hi"))
        cfg.hi = j["hi"].get<double>();
    if (j.contains("points"))
        cfg.points = j["points"].get<std::size_t>();
    if (j.contains("maps"))
        cfg.maps = j["maps"].get<std::vector<std::string>>();
    if (j.contains("party"))
        cfg.party = j["party"].get<std::string>();
    if (j.contains("n"))
        cfg.n = j["n"].get<std::size_t>();
    if (j.contains("normalize"))
        cfg.normalize = j["normalize"].get<bool>();
    if (j.contains("out"))
        cfg.out = j["out"].get<std::string>();
    if (j.contains("jobs"))
        cfg.jobs = j["jobs"].get<std::size_t>();
    if (j.contains("refine"))
        cfg.refine = j["refine"].get<std::string>();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement detection via moments of positive maps"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "evaluate every criterion for one state/map");
    std::string state_id, map_id, party_str = "B";
    std::size_t n = 5;
    bool json_out = false, no_normalize = false;
    check->add_option("state", state_id, "state id, e.g. werner:0.5")->required();
    check->add_option("map", map_id, "map id, e.g. lambda1")->required();
    check->add_option("party", party_str, "party the map acts on (A/B/C or index)");
    check->add_option("n", n, "number of moments");
    check->add_flag("--json", json_out, "machine-readable output");
    check->add_flag("--no-normalize", no_normalize, "skip trace normalization of the moments");

    // scan
    auto* scan = app.add_subcommand("scan", "scan a state family and write CSV");
    ScanConfig cfg;
    std::string config_path;
    bool scan_no_normalize = false;
    scan->add_option("--config", config_path, "JSON config file (flags override)");
    auto* opt_family =
        scan->add_option("--family", cfg.family, "family: werner|sigma_b|rho_alpha|sigma_a|ghz|w");
    auto* opt_lo = scan->add_option("--lo", cfg.lo, "lower end of the parameter range");
    auto* opt_hi = scan->add_option("--hi", cfg.hi, "upper end of the parameter range");
    auto* opt_points = scan->add_option("--points", cfg.points, "number of grid points");
    auto* opt_maps = scan->add_option("--maps", cfg.maps, "map ids")->delimiter(',');
    auto* opt_party = scan->add_option("--party", cfg.party, "party the maps act on");
    auto* opt_n = scan->add_option("-n,--moments", cfg.n, "number of moments (>= 5)");
    auto* opt_out = scan->add_option("--out", cfg.out, "output CSV path");
    auto* opt_jobs = scan->add_option("--jobs", cfg.jobs, "parallel grid evaluations");
    auto* opt_refine =
        scan->add_option("--refine", cfg.refine, "bisect the first sign change of this column");
    scan->add_flag("--no-normalize", scan_no_normalize, "skip trace normalization");

    // report
    auto* report = app.add_subcommand("report", "run the verification suite");
    bool corrupt_sigma_b = false;
    report->add_flag("--corrupt-sigma-b", corrupt_sigma_b,
                     "negative-control fixture: corrupt the sigma_b coherences");

    // state
    auto* state = app.add_subcommand("state", "print a generated state matrix");
    std::string print_id, print_out;
    state->add_option("state", print_id, "state id")->required();
    state->add_option("--out", print_out, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (check->parsed())
            return cmd_check(state_id, map_id, party_str, n, !no_normalize, json_out);
        if (scan->parsed()) {
            ScanConfig merged;
            if (!config_path.empty())
                load_scan_config_json(config_path, merged);
            if (opt_family->count())
                merged.family = cfg.family;
            if (opt_lo->count())
                merged.lo = cfg.lo;
            if (opt_hi->count())
                merged.hi = cfg.hi;
            if (opt_points->count())
                merged.points = cfg.points;
            if (opt_maps->count())
                merged.maps = cfg.maps;
            if (opt_party->count())
                merged.party = cfg.party;
            if (opt_n->count())
                merged.n = cfg.n;
            if (opt_out->count())
                merged.out = cfg.out;
            if (opt_jobs->count())
                merged.jobs = cfg.jobs;
            if (opt_refine->count())
                merged.refine = cfg.refine;
            if (scan_no_normalize)
                merged.normalize = false;
            return cmd_scan(merged);
        }
        if (report->parsed())
            return cmd_report(corrupt_sigma_b);
        if (state->parsed())
            return cmd_state(print_id, print_out);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
