// Command-line front end: deterministic CSV/JSON reports over the library's
// sweeps. Exit codes: 0 success, 1 duality violations found, 2 usage errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ideals/duality.hpp"
#include "ideals/io.hpp"
#include "ideals/series.hpp"
#include "ideals/smooth.hpp"

namespace {

struct common_options {
    std::string field = "q";
    std::string ext = "trivial";
    std::string class_label;
    std::string selector;
    std::string output;
    std::string checkpoints = "geo";
    std::int64_t xmax = 3000;
    int threads = 1;
    std::uint64_t seed = 12345;
};

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ideals::usage_error("cannot open output file '" + path + "'");
    out << text;
}

ideals::prime_ideal_selector make_selector(const common_options& opt,
                                           const ideals::extension_context& ctx) {
    if (!opt.class_label.empty() && !opt.selector.empty())
        throw ideals::usage_error("--class and --selector are mutually exclusive");
    if (!opt.class_label.empty())
        return ideals::prime_ideal_selector::conjugacy_class(ctx, opt.class_label);
    if (!opt.selector.empty()) return ideals::prime_ideal_selector::parse(opt.selector, ctx);
    return ideals::prime_ideal_selector::all();
}

void add_common(CLI::App* cmd, common_options& opt, bool with_ext = true) {
    cmd->add_option("--field", opt.field, "field spec: q | quad:<d>");
    if (with_ext)
        cmd->add_option("--ext", opt.ext, "extension spec: trivial | cyclo:<n> | relquad:<m>");
    cmd->add_option("--xmax", opt.xmax, "norm bound of the sweep");
    cmd->add_option("--threads", opt.threads, "worker threads (output is thread-count independent)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--output", opt.output, "output path (default stdout)");
    cmd->add_option("--seed", opt.seed, "seed for any randomized tables");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Prime-ideal duality sweeps, Chebotarev density series and smooth-ideal counts.\n"
        "Field specs: q (rationals), quad:<d> (quadratic, squarefree d).\n"
        "Extension specs: trivial, cyclo:<n> (over q), relquad:<m> (over quad:<d>).\n"
        "Selectors: all | class:<label> | residue:<l>:<k> | normmod:<r>:<m>."};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file, '#' comments");

    common_options opt;
    int exit_code = 0;

    auto* verify = app.add_subcommand("verify-duality",
                                      "exact duality identity sweep; JSON summary, exit 1 on any "
                                      "violation");
    int kmax = 3;
    add_common(verify, opt);
    verify->add_option("--kmax", kmax, "largest duality order to check");
    verify->add_option("--class", opt.class_label, "conjugacy class label");
    verify->add_option("--selector", opt.selector, "prime-ideal selector");
    verify->callback([&] {
        auto ctx = ideals::extension_context::parse(opt.field, opt.ext);
        ideals::batch_summary total;
        if (opt.class_label.empty() && opt.selector.empty()) {
            // Default: every conjugacy class of the extension.
            for (const auto& label : ctx.ext.class_ids) {
                auto sel = ideals::prime_ideal_selector::conjugacy_class(ctx, label);
                total.merge(ideals::batch_verify(ctx.field, opt.xmax, kmax, sel, opt.threads));
            }
        } else {
            total = ideals::batch_verify(ctx.field, opt.xmax, kmax, make_selector(opt, ctx),
                                         opt.threads);
        }
        write_output(opt.output, ideals::to_json(total));
        if (!total.violations.empty()) exit_code = 1;
    });

    auto* classical = app.add_subcommand(
        "classical", "integer duality identities with random rational f tables; JSON summary");
    std::int64_t nmax = 100000;
    int ckmax = 4, tables = 3;
    classical->add_option("--nmax", nmax, "sweep bound");
    classical->add_option("--kmax", ckmax, "largest order");
    classical->add_option("--tables", tables, "number of random f tables");
    classical->add_option("--seed", opt.seed, "table seed");
    classical->add_option("--output", opt.output, "output path (default stdout)");
    classical->callback([&] {
        auto summary = ideals::classical_verify_sweep(nmax, ckmax, tables, opt.seed);
        write_output(opt.output, ideals::to_json(summary));
        if (summary.violations != 0) exit_code = 1;
    });

    auto* density = app.add_subcommand(
        "density", "checkpointed weighted Mobius sums over salient selected ideals; CSV");
    std::string weight = "mu";
    add_common(density, opt);
    density->add_option("--class", opt.class_label, "conjugacy class label");
    density->add_option("--selector", opt.selector, "prime-ideal selector");
    density->add_option("--weight", weight, "mu | momega1 | momega | mu-sum | momega-sum");
    density->add_option("--checkpoints", opt.checkpoints, "geo | comma-separated list");
    density->callback([&] {
        auto ctx = ideals::extension_context::parse(opt.field, opt.ext);
        auto series = ideals::density_series(
            ctx, make_selector(opt, ctx), ideals::parse_series_weight(weight), opt.xmax,
            ideals::checkpoints::parse(opt.checkpoints, opt.xmax), opt.threads);
        write_output(opt.output, ideals::to_csv(series));
    });

    auto* qsum = app.add_subcommand(
        "qsum", "cumulative count of selected primes at the k-th largest norm level; CSV");
    int qk = 1;
    add_common(qsum, opt);
    qsum->add_option("--class", opt.class_label, "conjugacy class label");
    qsum->add_option("--selector", opt.selector, "prime-ideal selector");
    qsum->add_option("--k", qk, "norm level order (1 or 2)");
    qsum->add_option("--checkpoints", opt.checkpoints, "geo | comma-separated list");
    qsum->callback([&] {
        auto ctx = ideals::extension_context::parse(opt.field, opt.ext);
        auto report = ideals::q_sum_series(ctx, make_selector(opt, ctx), qk, opt.xmax,
                                           ideals::checkpoints::parse(opt.checkpoints, opt.xmax),
                                           opt.threads);
        write_output(opt.output, ideals::to_csv(report));
    });

    auto* counts = app.add_subcommand(
        "counts", "prime-ideal, class and ideal counts against their main terms; CSV");
    add_common(counts, opt);
    counts->add_option("--checkpoints", opt.checkpoints, "geo | comma-separated list");
    counts->callback([&] {
        auto ctx = ideals::extension_context::parse(opt.field, opt.ext);
        auto report = ideals::counting_report(
            ctx, opt.xmax, ideals::checkpoints::parse(opt.checkpoints, opt.xmax), opt.threads);
        write_output(opt.output, ideals::to_csv(report));
    });

    auto* smooth = app.add_subcommand(
        "smooth", "exact smooth-ideal counts against the Dickman prediction; CSV");
    std::vector<double> betas;
    std::int64_t fixed_y = 0;
    add_common(smooth, opt, false);
    smooth->add_option("--beta", betas, "beta values (y = x^(1/beta))");
    smooth->add_option("--y", fixed_y, "single explicit smoothness bound");
    smooth->callback([&] {
        auto field = ideals::field_spec::parse(opt.field);
        std::vector<ideals::smooth_count_report> rows;
        if (fixed_y > 0) {
            rows.push_back(ideals::smooth_report(field, opt.xmax, fixed_y));
        } else {
            if (betas.empty()) betas = {1.5, 2.0, 2.5, 3.0};
            rows = ideals::smooth_asymptotic_compare(field, opt.xmax, betas);
        }
        write_output(opt.output, ideals::to_csv(rows));
    });

    auto* dickman = app.add_subcommand("dickman", "Dickman rho value");
    double beta = 2.0;
    std::string dickman_out;
    dickman->add_option("--beta", beta, "argument")->required();
    dickman->add_option("--output", dickman_out, "output path (default stdout)");
    dickman->callback([&] {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12f\n", ideals::dickman_rho(beta));
        write_output(dickman_out, buf);
    });

    auto* mobius = app.add_subcommand(
        "mobius-sums", "full-range Mobius sums (unit included, no selector); CSV");
    bool normalized = false;
    add_common(mobius, opt, false);
    mobius->add_flag("--normalized", normalized, "sum mu/N instead of mu");
    mobius->add_option("--checkpoints", opt.checkpoints, "geo | comma-separated list");
    mobius->callback([&] {
        auto field = ideals::field_spec::parse(opt.field);
        auto series = ideals::mobius_sum_series(
            field, opt.xmax, normalized, ideals::checkpoints::parse(opt.checkpoints, opt.xmax),
            opt.threads);
        write_output(opt.output, ideals::to_csv(series));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ideals::usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ideals::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
