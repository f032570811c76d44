// Command-line surface: generate workloads, run the reconstruction programs,
// verify the optimality and correctness claims at desk scale, and emit
// benchmark rows.

#include "parfront/instance.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace parfront;

namespace {

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, std::string text) {
    if (text.empty() || text.back() != '\n') text += '\n';
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
}

std::int64_t scaled(const Rational& v, std::int64_t den) {
    return (v * Rational(den)).num(); // exact by construction of the instance
}

nlohmann::ordered_json report_json(const InstanceFile& inst, Algo algo,
                                   const StrategyResult& res, double wall_ns) {
    nlohmann::ordered_json j;
    j["algorithm"] = algo_name(algo);
    j["kind"] = inst.kind;
    j["n"] = inst.size();
    nlohmann::ordered_json front = nlohmann::ordered_json::array();
    for (const FrontMember& m : res.front.members) {
        nlohmann::ordered_json e;
        e["id"] = m.id;
        e["rect"] = {scaled(m.shape.x_lo, inst.denominator), scaled(m.shape.y_lo, inst.denominator),
                     scaled(m.shape.x_hi, inst.denominator), scaled(m.shape.y_hi, inst.denominator)};
        e["point"] = m.shape.is_point();
        front.push_back(e);
    }
    j["front"] = front;
    nlohmann::ordered_json retr;
    retr["count"] = res.log.size();
    std::vector<int> ids, stages;
    for (auto& [id, st] : res.log) {
        ids.push_back(id);
        stages.push_back(st);
    }
    retr["ids"] = ids;
    retr["stages"] = stages;
    j["retrievals"] = retr;
    Preprocessed pre = preprocess(inst.to_rects());
    j["dominated_in_f0"] = pre.report.dominated_in_f0;
    nlohmann::ordered_json work;
    work["comparisons"] = res.counters.comparisons;
    work["cell_sweep_comparisons"] = res.counters.cell_sweep_comparisons;
    work["finger_sweep_comparisons"] = res.counters.finger_sweep_comparisons;
    work["finger_log_sum"] = res.counters.finger_log_sum;
    work["finger_insertions"] = res.counters.finger_insertions;
    work["finger_tree_size"] = res.counters.finger_tree_size;
    work["fiddly_points"] = res.counters.fiddly_points;
    j["work"] = work;
    j["timings"] = {{"wall_ns", wall_ns}};
    return j;
}

int run_verify(const std::string& path, bool opt_check, bool inject_unfinished) {
    InstanceFile inst = InstanceFile::parse(read_file(path));
    bool all_ok = true;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
        all_ok = all_ok && ok;
    };
    if (!inst.realization) {
        std::cout << "skipped: no realization\n";
        return 0;
    }

    std::vector<Algo> algos{Algo::reference, Algo::reference_layered, Algo::rectangles};
    if (inst.unit_side) algos.push_back(Algo::unit_squares);
    FrontResult truth = retrieve_everything_front(inst.to_points());
    std::vector<StrategyResult> runs;
    for (Algo a : algos) runs.push_back(solve_instance(inst, a));

    if (inject_unfinished && !runs[0].log.empty()) {
        // negative control: drop the last retrieval of the reference run
        Preprocessed pre = preprocess(inst.to_rects());
        Family g = pre.family;
        std::vector<Point> real = inst.to_points();
        for (std::size_t i = 0; i + 1 < runs[0].log.size(); ++i)
            g.apply_retrieval(std::size_t(runs[0].log[i].first),
                              real[std::size_t(runs[0].log[i].first)]);
        runs[0].final_family = g;
    }

    bool fronts_ok = true, finished_ok = true;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        fronts_ok = fronts_ok && same_prec_order(runs[i].front, truth);
        finished_ok = finished_ok && finished(runs[i].final_family);
    }
    check("fronts-equal-revealed-front", fronts_ok);
    check("final-family-finished", finished_ok);
    if (opt_check) {
        if (inst.size() <= 10) {
            auto mr = min_retrievals(Family(inst.to_rects()), inst.to_points());
            bool opt_ok = mr.has_value();
            for (const StrategyResult& r : runs)
                opt_ok = opt_ok && int(r.log.size()) <= 5 * mr->count &&
                         int(r.log.size()) >= mr->count;
            check("retrievals-within-5x-optimal", opt_ok);
        } else {
            std::cout << "SKIP  retrievals-within-5x-optimal (n > 10)\n";
        }
    }
    {
        IndependenceReport fast = preprocess_family(Family(inst.to_rects()), true);
        IndependenceReport naive = preprocess_family(Family(inst.to_rects()), false);
        check("fast-naive-independence-agreement",
              fast.independent == naive.independent && fast.dependent == naive.dependent);
    }
    {
        Rng rng(0xB0907);
        bool lemma_ok = true;
        for (int iter = 0; iter < 50; ++iter) {
            int k = 1 + int(rng.below(5));
            IntervalSystem s;
            for (int i = 0; i < k; ++i) {
                std::int64_t a = rng.range(0, 7);
                std::int64_t b = a + 1 + rng.range(0, 7 - a);
                s.intervals.emplace_back(Rational(a), Rational(b));
            }
            s.m = Rational(8);
            lemma_ok = lemma_ok && interval_lemma_check(s);
        }
        check("interval-lemma-spot-checks", lemma_ok);
    }
    return all_ok ? 0 : 1;
}

std::int64_t analytic_min_retrievals(const InstanceFile& inst, const Preprocessed& pre) {
    if (inst.kind == "bl-corners" || inst.kind == "identical-squares")
        return std::int64_t(pre.report.dependent.size());
    if (inst.kind == "all-independent") return 0;
    if (inst.kind == "tr-corners") return inst.size() > 1 ? 1 : 0;
    if (inst.size() <= 10) {
        auto mr = min_retrievals(Family(inst.to_rects()), inst.to_points());
        if (mr) return mr->count;
    }
    return -1;
}

int run_bench(const std::string& suite, const std::vector<std::int64_t>& sizes,
              const std::vector<std::uint64_t>& seeds, const std::string& out_path) {
    std::ostringstream csv;
    csv << "kind,n,r,retrievals,comparisons,lb_linear,lb_grid,finger_log_sum,wall_time_ns\n";
    for (std::int64_t n : sizes) {
        for (std::uint64_t seed : seeds) {
            InstanceFile inst = generate(suite, n, seed);
            Algo algo = inst.unit_side ? Algo::unit_squares : Algo::rectangles;
            auto t0 = std::chrono::steady_clock::now();
            StrategyResult res = solve_instance(inst, algo);
            auto t1 = std::chrono::steady_clock::now();
            Preprocessed pre = preprocess(inst.to_rects());
            double lb_grid = 0;
            if (inst.unit_side) {
                GridOverlay g =
                    overlay_grid_and_classify(pre.family, pre.report.dependent, inst.side());
                lb_grid = grid_lower_bound(g);
            }
            csv << inst.kind << "," << n << "," << analytic_min_retrievals(inst, pre) << ","
                << res.log.size() << "," << res.counters.comparisons << ","
                << pre.report.dependent.size() << "," << lb_grid << ","
                << res.counters.finger_log_sum << ","
                << std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count() << "\n";
        }
    }
    write_output(out_path, csv.str());
    return 0;
}

int run_bounds(const std::string& path) {
    InstanceFile inst = InstanceFile::parse(read_file(path));
    Preprocessed pre = preprocess(inst.to_rects());
    nlohmann::ordered_json j;
    j["n"] = inst.size();
    j["dependent"] = pre.report.dependent.size();
    j["independent"] = pre.report.independent.size();
    j["dominated_in_f0"] = pre.report.dominated_in_f0.size();
    j["lb_linear"] = pre.report.dependent.size();
    if (inst.unit_side) {
        GridOverlay g = overlay_grid_and_classify(pre.family, pre.report.dependent, inst.side());
        std::int64_t a = 0, b = 0, c = 0;
        for (auto& [key, cell] : g.cells) {
            a += std::int64_t(cell.a_ids.size());
            b += std::int64_t(cell.b_ids.size());
            c += std::int64_t(cell.c_ids.size());
        }
        j["type_a"] = a;
        j["type_b"] = b;
        j["type_c"] = c;
        j["lb_grid"] = grid_lower_bound(g);
        j["cell_work_bound"] = cell_work_bound(g);
    }
    write_output("", j.dump(2));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pareto front reconstruction for imprecise planar points"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate an instance file");
    std::string gen_kind = "random-rects", gen_out;
    std::int64_t gen_n = 8;
    std::uint64_t gen_seed = 1;
    std::vector<std::string> gen_params;
    gen->add_option("--kind", gen_kind, "generator kind");
    gen->add_option("--n", gen_n, "number of regions");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--params", gen_params, "key=value generator parameters");
    gen->add_option("-o,--output", gen_out, "output path (default stdout)");

    auto* solve = app.add_subcommand("solve", "run a reconstruction program");
    std::string solve_algo = "rectangles", solve_file, solve_out;
    bool solve_strict = false;
    solve->add_option("--algo", solve_algo,
                      "reference | reference-layered | rectangles | unit-squares");
    solve->add_option("file", solve_file, "instance file")->required();
    solve->add_option("-o,--output", solve_out, "report path (default stdout)");
    solve->add_flag("--strict", solve_strict, "enable internal invariant checks");

    auto* verify = app.add_subcommand("verify", "run all programs and the desk-scale oracles");
    std::string verify_file;
    bool opt_check = false, inject = false;
    verify->add_option("file", verify_file, "instance file")->required();
    verify->add_flag("--opt-check", opt_check, "brute-force optimality check (n <= 10)");
    verify->add_flag("--inject-unfinished", inject, "negative control: drop one retrieval");

    auto* bench = app.add_subcommand("bench", "emit benchmark CSV rows");
    std::string bench_suite = "bl-corners", bench_out;
    std::vector<std::int64_t> bench_sizes{1024};
    std::vector<std::uint64_t> bench_seeds{1};
    bench->add_option("--suite", bench_suite, "generator kind used as the suite");
    bench->add_option("--sizes", bench_sizes, "instance sizes")->delimiter(',');
    bench->add_option("--seeds", bench_seeds, "seeds")->delimiter(',');
    bench->add_option("-o,--output", bench_out, "CSV path (default stdout)");

    auto* bounds = app.add_subcommand("bounds", "print the analysis quantities of an instance");
    std::string bounds_file;
    bounds->add_option("file", bounds_file, "instance file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            std::map<std::string, std::int64_t> params;
            for (const std::string& kv : gen_params) {
                auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("bad --params entry: " + kv);
                params[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
            }
            write_output(gen_out, generate(gen_kind, gen_n, gen_seed, params).emit());
            return 0;
        }
        if (solve->parsed()) {
            auto algo = algo_from_name(solve_algo);
            if (!algo) throw std::invalid_argument("unknown algorithm: " + solve_algo);
            InstanceFile inst = InstanceFile::parse(read_file(solve_file));
            RunOptions opts;
            opts.strict_checks = solve_strict;
            auto t0 = std::chrono::steady_clock::now();
            StrategyResult res = solve_instance(inst, *algo, opts);
            auto t1 = std::chrono::steady_clock::now();
            double ns =
                double(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
            write_output(solve_out, report_json(inst, *algo, res, ns).dump(2));
            return 0;
        }
        if (verify->parsed()) return run_verify(verify_file, opt_check, inject);
        if (bench->parsed()) return run_bench(bench_suite, bench_sizes, bench_seeds, bench_out);
        if (bounds->parsed()) return run_bounds(bounds_file);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
