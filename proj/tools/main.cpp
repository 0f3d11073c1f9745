// arcs: generate and certify almost resolvable cycle systems of order
// 4k+1 (odd k >= 11).
//
// Exit codes: 0 pass, 1 verification failure, 2 usage/parse error,
// 3 internal construction failure.

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "arcs/family_mod1.hpp"
#include "arcs/generate.hpp"
#include "arcs/json_io.hpp"
#include "arcs/verify.hpp"

namespace {

int require_supported(int k) {
    if (k % 2 == 0) {
        std::cerr << "error: k must be odd; " << arcs::supported_range_message() << "\n";
        return 2;
    }
    if (!arcs::supported_order(k)) {
        std::cerr << "error: k=" << k << " is out of range; " << arcs::supported_range_message()
                  << "\n";
        return 2;
    }
    return 0;
}

int cmd_generate(int k, const std::string& format, const std::string& out_path) {
    if (int rc = require_supported(k)) return rc;
    arcs::ArcsSystem sys;
    try {
        sys = arcs::generate_system(k);
    } catch (const std::exception& e) {
        std::cerr << "error: construction failed: " << e.what() << "\n";
        return 3;
    }
    arcs::VerificationReport rep = arcs::verify_arcs(sys);
    if (!rep.pass) {
        std::cerr << "error: internal verification failed\n" << rep.to_string();
        return 3;
    }
    std::string payload = format == "text" ? arcs::to_text(sys) : arcs::to_json(sys);
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open " << out_path << " for writing\n";
            return 2;
        }
        out << payload;
    }
    return 0;
}

int cmd_verify(const std::string& in_path) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open " << in_path << "\n";
        return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    arcs::ArcsSystem sys;
    try {
        sys = arcs::system_from_json(buf.str());
    } catch (const arcs::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    arcs::VerificationReport rep = arcs::verify_arcs(sys);
    std::cout << rep.to_string();
    return rep.pass ? 0 : 1;
}

int cmd_check_conditions(int k) {
    if (int rc = require_supported(k)) return rc;
    arcs::StarterPair sp;
    try {
        sp = arcs::starter_for(k);
    } catch (const std::exception& e) {
        // The builder itself enforces the conditions, so reaching this
        // point means a table defect; still report it per condition.
        std::cerr << "error: construction failed: " << e.what() << "\n";
        return 3;
    }
    std::cout << "k=" << k << " v=" << 4 * k + 1 << " missing=" << arcs::to_string(sp.f1.missing)
              << "," << arcs::to_string(sp.f2.missing) << " d2=" << sp.d2 << " d3=" << sp.d3
              << "\n";
    arcs::ConditionReport rep = arcs::check_conditions(sp);
    static const char* labels[5] = {"(1)", "(2)", "(3)", "(4)", "(5)"};
    for (int i = 0; i < 5; ++i) {
        std::cout << labels[i] << " " << arcs::ConditionReport::condition_name(i) << ": "
                  << (rep.ok[static_cast<std::size_t>(i)] ? "PASS" : "FAIL");
        if (!rep.ok[static_cast<std::size_t>(i)])
            std::cout << " " << rep.detail[static_cast<std::size_t>(i)];
        std::cout << "\n";
    }
    return rep.pass() ? 0 : 1;
}

struct SweepResult {
    int k = 0;
    bool pass = false;
    long long edges = 0;
    std::size_t classes = 0;
    double millis = 0.0;
    std::string error;
};

SweepResult sweep_one(int k) {
    SweepResult r;
    r.k = k;
    auto t0 = std::chrono::steady_clock::now();
    try {
        arcs::ArcsSystem sys = arcs::generate_system(k);
        arcs::VerificationReport rep = arcs::verify_arcs(sys);
        r.pass = rep.pass;
        r.edges = rep.pairs_covered_once;
        r.classes = rep.almost_class_count;
        if (!rep.pass) r.error = "verification failed";
    } catch (const std::exception& e) {
        r.pass = false;
        r.error = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    r.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

int cmd_sweep(int from, int to, int jobs) {
    if (from > to) {
        std::cerr << "error: --from must not exceed --to\n";
        return 2;
    }
    std::vector<int> ks;
    for (int k = from; k <= to; ++k)
        if (arcs::supported_order(k)) ks.push_back(k);
    if (ks.empty()) {
        std::cout << "warning: 0 values tested (no supported k in [" << from << "," << to << "])\n";
        return 0;
    }
    std::vector<SweepResult> results(ks.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < ks.size(); ++i) results[i] = sweep_one(ks[i]);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= ks.size()) return;
                results[i] = sweep_one(ks[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    std::vector<int> failing;
    for (const SweepResult& r : results) {
        std::ostringstream line;
        line << "k=" << r.k << " v=" << 4 * r.k + 1 << " classes=" << r.classes << "+1 edges="
             << r.edges << " " << (r.pass ? "PASS" : "FAIL") << " "
             << static_cast<long long>(r.millis * 10) / 10.0 << "ms";
        if (!r.error.empty()) line << " (" << r.error << ")";
        std::cout << line.str() << "\n";
        if (!r.pass) failing.push_back(r.k);
    }
    std::cout << ks.size() << " values tested, " << ks.size() - failing.size() << " passed\n";
    if (!failing.empty()) {
        std::cout << "failing k:";
        for (int k : failing) std::cout << " " << k;
        std::cout << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"almost resolvable cycle systems of order 4k+1 (odd k >= 11)"};
    app.require_subcommand(1);

    int gen_k = 0;
    std::string gen_format = "json";
    std::string gen_out;
    CLI::App* gen = app.add_subcommand("generate", "generate one system");
    gen->add_option("--k", gen_k, "cycle length")->required();
    gen->add_option("--format", gen_format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    gen->add_option("--out", gen_out, "output path (default stdout)");

    std::string verify_in;
    CLI::App* ver = app.add_subcommand("verify", "verify a serialized system");
    ver->add_option("--input", verify_in, "path to a JSON document")->required();

    int check_k = 0;
    CLI::App* chk = app.add_subcommand("check-conditions", "report the starter conditions");
    chk->add_option("--k", check_k, "cycle length")->required();

    int sweep_from = 0, sweep_to = 0, sweep_jobs = 1;
    CLI::App* swp = app.add_subcommand("sweep", "generate and verify a range of orders");
    swp->add_option("--from", sweep_from, "first k")->required();
    swp->add_option("--to", sweep_to, "last k")->required();
    swp->add_option("--jobs", sweep_jobs, "parallel workers (across k values)")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (gen->parsed()) return cmd_generate(gen_k, gen_format, gen_out);
    if (ver->parsed()) return cmd_verify(verify_in);
    if (chk->parsed()) return cmd_check_conditions(check_k);
    if (swp->parsed()) return cmd_sweep(sweep_from, sweep_to, sweep_jobs);
    return 2;
}
