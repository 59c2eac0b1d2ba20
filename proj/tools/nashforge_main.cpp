// nashforge: exact differential-operator, principal-parts and Frobenius
// computations with machine-checkable verdicts.
//
// Exit codes: 0 verdict produced, 2 request outside certified scope,
// 3 step budget exhausted, 4 parse/validation failure, 1 internal error or
// failed --verify cross-check.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "nashforge/errors.hpp"
#include "nashforge/tasks.hpp"

namespace {

struct CommonOpts {
    std::string input;
    int order = 0;
    int cutoff = 0;
    std::string format = "text";
    bool verify = false;
    long budget = 0;
};

long resolve_budget(long flag) {
    if (flag > 0) return flag;
    const char* env = std::getenv("NASHFORGE_BUDGET");
    if (!env || !*env) return 0;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v <= 0)
        throw std::invalid_argument("NASHFORGE_BUDGET must be a positive integer");
    return v;
}

// Runs one input end to end; the report goes to `out`, diagnostics to `err`.
int run_file(const std::string& path, const std::string& kind, const CommonOpts& o,
             std::string& out, std::string& err) {
    try {
        nashforge::VarietyInput in = nashforge::parse_variety_file(path);
        std::string resolved = kind.empty() ? in.task_kind : kind;
        if (resolved.empty())
            throw std::invalid_argument(path + ": no task given and no [task] kind in the file");
        nashforge::TaskOptions opt;
        opt.kind = resolved;
        opt.order = o.order;
        opt.cutoff = o.cutoff;
        opt.verify = o.verify;
        opt.budget = resolve_budget(o.budget);
        nashforge::Report r = nashforge::run_task(in, opt);
        out = o.format == "json" ? nashforge::emit_json(r) : nashforge::emit_text(r);
        return 0;
    } catch (const nashforge::UnsupportedScopeError& e) {
        err = "unsupported scope: " + std::string(e.what());
        if (!e.witness.empty()) err += " (" + e.witness + ")";
        err += "\n";
        return 2;
    } catch (const nashforge::BudgetExceededError& e) {
        err = "budget exhausted: " + std::string(e.what()) +
              "; raise --budget or NASHFORGE_BUDGET\n";
        return 3;
    } catch (const nashforge::ParseError& e) {
        err = "parse error: " + std::string(e.what()) + "\n";
        return 4;
    } catch (const nashforge::FieldMismatchError& e) {
        err = "field mismatch: " + std::string(e.what()) + "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        err = "invalid input: " + std::string(e.what()) + "\n";
        return 4;
    } catch (const nashforge::VerificationError& e) {
        err = "verification failed: " + std::string(e.what()) + "\n";
        return 1;
    } catch (const std::exception& e) {
        err = "internal error: " + std::string(e.what()) + "\n";
        return 1;
    }
}

int run_batch(const std::string& dir, const CommonOpts& o, unsigned jobs) {
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir, ec))
        if (entry.is_regular_file() && entry.path().extension() == ".nf")
            files.push_back(entry.path().string());
    if (ec) {
        std::cerr << "batch: cannot read directory " << dir << ": " << ec.message() << "\n";
        return 4;
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::cerr << "batch: no .nf files in " << dir << "\n";
        return 4;
    }

    // files are independent; run them on a small pool, then print in name
    // order so the combined stream is deterministic
    std::vector<std::string> outs(files.size()), errs(files.size());
    std::vector<int> codes(files.size(), 0);
    std::atomic<size_t> next{0};
    unsigned workers = std::min<unsigned>(jobs ? jobs : 1, files.size());
    auto work = [&] {
        for (size_t i = next++; i < files.size(); i = next++)
            codes[i] = run_file(files[i], "", o, outs[i], errs[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    int rc = 0;
    for (size_t i = 0; i < files.size(); ++i) {
        std::cout << outs[i];
        if (!errs[i].empty()) std::cerr << files[i] << ": " << errs[i];
        rc = std::max(rc, codes[i]);
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Nash-blowup obstruction toolkit: differential powers, principal parts, "
                 "Frobenius and quotient tests over Q and F_p"};
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, std::string>> kinds = {
        {"nash-check", "free-rank obstruction and hypersurface certification for the order-n Nash modification"},
        {"diffpower", "n-th differential power of the maximal ideal: generators, codimension, operators"},
        {"pparts", "principal-parts presentation and torsion analysis"},
        {"core-chain", "descending chain of differential powers with a stabilization verdict"},
        {"fpure", "Fedder splitting test at the origin (prime characteristic)"},
        {"kunz", "regularity via freeness of the Frobenius pushforward (prime characteristic)"},
        {"smooth", "Jacobian smoothness at the origin"},
        {"quotient", "differential-power dimension bound for a linear quotient singularity"},
        {"oracle", "degree-bounded jet-space lower bound for the differential-power codimension"},
    };

    CommonOpts o;
    int rc = 0;
    for (const auto& [kind, help] : kinds) {
        CLI::App* sub = app.add_subcommand(kind, help);
        sub->add_option("--input", o.input, "input file ([variety]/[group]/[task] format)")
            ->required();
        sub->add_option("--order", o.order, "task order n (kunz: Frobenius power e)")
            ->check(CLI::PositiveNumber);
        if (kind == "oracle")
            sub->add_option("--cutoff", o.cutoff, "jet degree cutoff (default: order-dependent)")
                ->check(CLI::PositiveNumber);
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_flag("--verify", o.verify, "rerun an independent oracle and fail on disagreement");
        sub->add_option("--budget", o.budget, "reduction-step budget (default 10^7)")
            ->check(CLI::PositiveNumber);
        sub->callback([&rc, &o, kind = kind] {
            std::string out, err;
            rc = run_file(o.input, kind, o, out, err);
            std::cout << out;
            std::cerr << err;
        });
    }

    unsigned jobs = 1;
    CLI::App* batch = app.add_subcommand(
        "batch", "run every .nf file in a directory using its [task] section, reports in name order");
    batch->add_option("--input", o.input, "directory of .nf input files")->required();
    batch->add_option("--jobs", jobs, "worker threads (default 1)")->check(CLI::PositiveNumber);
    batch->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
    batch->add_flag("--verify", o.verify, "rerun independent oracles and fail on disagreement");
    batch->add_option("--budget", o.budget, "reduction-step budget per task (default 10^7)")
        ->check(CLI::PositiveNumber);
    batch->callback([&rc, &o, &jobs] { rc = run_batch(o.input, o, jobs); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 4;  // command-line validation joins file validation
    }
    return rc;
}
