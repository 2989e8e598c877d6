// Command line front end for the walk-sampling library. Everything goes
// through the C API in saw/capi.h; no core headers are included here.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "saw/capi.h"

using nlohmann::json;

namespace {

using CStr = std::unique_ptr<char, void (*)(char*)>;

CStr own(char* p) { return CStr(p, &saw_string_free); }

// Exit codes: 0 success, 1 usage or invalid arguments, 2 resource limit
// exceeded.
int die(saw_status st) {
    std::cerr << "error: " << saw_last_error() << "\n";
    return st == SAW_LIMIT_EXCEEDED ? 2 : 1;
}

const std::map<std::string, saw_model> kModels = {
    {"crossing", SAW_MODEL_CROSSING},
    {"directed", SAW_MODEL_DIRECTED},
    {"nes", SAW_MODEL_NES},
    {"untrapped", SAW_MODEL_UNTRAPPED},
};

const char* model_string(saw_model m) {
    for (const auto& [name, value] : kModels)
        if (value == m) return name.c_str();
    return "?";
}

struct Options {
    saw_model model = SAW_MODEL_CROSSING;
    int k = 0;
    int l = 0;
    int length = 0;
    int lmax = 0;
    int kmax = 3;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    int threads = 1;
    bool exhaustive = false;
    int cell = 0;
    int columns = 0;
    std::string format = "json";
    std::string out;
};

int write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return 1;
    }
    f << text;
    f.flush();
    if (!f.good()) {
        std::cerr << "error: failed writing " << path << "\n";
        return 1;
    }
    return 0;
}

// Mantissa/exponent display built from log10 so that values far beyond
// double range would still print.
std::string sci_from_log10(double lg) {
    if (!std::isfinite(lg)) return "nan";
    double e = std::floor(lg);
    double m = std::pow(10.0, lg - e);
    if (m >= 10.0) {
        m /= 10.0;
        e += 1;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6fe%+03d", m, static_cast<int>(e));
    return buf;
}

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void echo_params(json& j, const Options& o) {
    j["model"] = model_string(o.model);
    switch (o.model) {
        case SAW_MODEL_CROSSING:
        case SAW_MODEL_DIRECTED: j["k"] = o.k; break;
        case SAW_MODEL_NES:
            j["k"] = o.k;
            j["l"] = o.l;
            break;
        case SAW_MODEL_UNTRAPPED: j["length"] = o.length; break;
    }
}

int cmd_sample(const Options& o) {
    saw_run* run = nullptr;
    if (saw_status st =
            saw_run_new(o.model, o.k, o.l, o.length, o.n, o.seed, &run))
        return die(st);
    std::unique_ptr<saw_run, void (*)(saw_run*)> owner(run, &saw_run_free);

    std::string text;
    const uint64_t count = saw_run_count(run);
    if (o.format == "csv") {
        text = "index,steps,invp,a,b\n";
        for (uint64_t i = 0; i < count; ++i) {
            char *steps = nullptr, *invp = nullptr;
            uint32_t a = 0, b = 0;
            if (saw_status st = saw_run_steps(run, i, &steps)) return die(st);
            CStr s = own(steps);
            if (saw_status st = saw_run_invp(run, i, &invp)) return die(st);
            CStr v = own(invp);
            if (saw_status st = saw_run_powers(run, i, &a, &b)) return die(st);
            text += std::to_string(i) + "," + s.get() + "," + v.get() + "," +
                    std::to_string(a) + "," + std::to_string(b) + "\n";
        }
    } else {
        for (uint64_t i = 0; i < count; ++i) {
            char *steps = nullptr, *invp = nullptr;
            uint32_t a = 0, b = 0;
            const uint8_t* sizes = nullptr;
            size_t nsizes = 0;
            if (saw_status st = saw_run_steps(run, i, &steps)) return die(st);
            CStr s = own(steps);
            if (saw_status st = saw_run_invp(run, i, &invp)) return die(st);
            CStr v = own(invp);
            if (saw_status st = saw_run_powers(run, i, &a, &b)) return die(st);
            if (saw_status st = saw_run_per_step(run, i, &sizes, &nsizes))
                return die(st);
            json j;
            echo_params(j, o);
            j["steps"] = s.get();
            j["invp"] = v.get();
            j["a"] = a;
            j["b"] = b;
            j["per_step"] = std::vector<int>(sizes, sizes + nsizes);
            text += j.dump() + "\n";
        }
    }
    return write_output(text, o.out);
}

int cmd_estimate(const Options& o) {
    saw_estimate* e = nullptr;
    if (saw_status st = saw_estimate_new(o.model, o.k, o.l, o.length, o.n,
                                         o.seed, o.threads, &e))
        return die(st);
    std::unique_ptr<saw_estimate, void (*)(saw_estimate*)> owner(
        e, &saw_estimate_free);

    char *num = nullptr, *den = nullptr;
    if (saw_status st = saw_estimate_mean(e, &num, &den)) return die(st);
    CStr n_owned = own(num), d_owned = own(den);
    double lg = 0, se = 0, rv = 0;
    if (saw_status st = saw_estimate_stats(e, &lg, &se, &rv)) return die(st);

    std::string text;
    if (o.format == "csv") {
        text =
            "model,k,l,length,n,seed,threads,mean,log10_mean,std_error,"
            "relative_variance\n";
        text += std::string(model_string(o.model)) + "," + std::to_string(o.k) +
                "," + std::to_string(o.l) + "," + std::to_string(o.length) +
                "," + std::to_string(o.n) + "," + std::to_string(o.seed) + "," +
                std::to_string(o.threads) + "," + sci_from_log10(lg) + "," +
                fmt_double(lg) + "," + fmt_double(se) + "," + fmt_double(rv) +
                "\n";
    } else {
        json j;
        echo_params(j, o);
        j["n"] = o.n;
        j["seed"] = o.seed;
        j["threads"] = o.threads;
        j["mean"] = sci_from_log10(lg);
        j["mean_num"] = n_owned.get();
        j["mean_den"] = d_owned.get();
        j["log10_mean"] = lg;
        j["std_error"] = se;
        j["relative_variance"] = rv;
        text = j.dump() + "\n";
    }
    return write_output(text, o.out);
}

int cmd_moments(const Options& o) {
    saw_moments* m = nullptr;
    if (saw_status st = saw_moments_new(o.model, o.k, o.lmax, &m))
        return die(st);
    std::unique_ptr<saw_moments, void (*)(saw_moments*)> owner(
        m, &saw_moments_free);

    const bool by_k = o.model == SAW_MODEL_DIRECTED;
    const char* key = by_k ? "k" : "l";
    const int rows = saw_moments_rows(m);
    std::string text;
    if (o.format == "csv") {
        text = std::string(key) + ",mean_sq,second_moment\n";
        for (int i = 1; i <= rows; ++i) {
            char *msq = nullptr, *snd = nullptr;
            if (saw_status st = saw_moments_row(m, i, &msq, &snd))
                return die(st);
            CStr a = own(msq), b = own(snd);
            text +=
                std::to_string(i) + "," + a.get() + "," + b.get() + "\n";
        }
    } else {
        json j;
        j["model"] = model_string(o.model);
        if (!by_k) j["k"] = o.k;
        json table = json::array();
        for (int i = 1; i <= rows; ++i) {
            char *msq = nullptr, *snd = nullptr;
            if (saw_status st = saw_moments_row(m, i, &msq, &snd))
                return die(st);
            CStr a = own(msq), b = own(snd);
            json row;
            row[key] = i;
            row["mean_sq"] = a.get();
            row["second_moment"] = b.get();
            table.push_back(row);
        }
        j["rows"] = table;
        text = j.dump() + "\n";
    }
    return write_output(text, o.out);
}

int cmd_enumerate(const Options& o) {
    saw_enum_report* r = nullptr;
    if (saw_status st = saw_enumerate(o.model, o.k, o.l, &r)) return die(st);
    std::unique_ptr<saw_enum_report, void (*)(saw_enum_report*)> owner(
        r, &saw_enum_report_free);

    char* count = nullptr;
    if (saw_status st = saw_enum_count(r, &count)) return die(st);
    CStr c = own(count);
    char* ws = nullptr;
    CStr w =
        own(saw_enum_weighted_sum(r, &ws) == SAW_OK ? ws : nullptr);
    char* ws2 = nullptr;
    CStr w2 =
        own(saw_enum_weighted_sq_sum(r, &ws2) == SAW_OK ? ws2 : nullptr);

    std::string text;
    if (o.format == "csv") {
        text = "model,k,l,count,weighted_sum,weighted_sq_sum\n";
        text += std::string(model_string(o.model)) + "," + std::to_string(o.k) +
                "," + std::to_string(o.l) + "," + c.get() + "," +
                (w ? w.get() : "") + "," + (w2 ? w2.get() : "") + "\n";
    } else {
        json j;
        echo_params(j, o);
        j["count"] = c.get();
        if (w) j["weighted_sum"] = w.get();
        if (w2) j["weighted_sq_sum"] = w2.get();
        text = j.dump() + "\n";
    }
    return write_output(text, o.out);
}

int cmd_asymptotics(const Options& o) {
    saw_asym* a = nullptr;
    if (saw_status st = saw_asym_new(o.k, &a)) return die(st);
    std::unique_ptr<saw_asym, void (*)(saw_asym*)> owner(a, &saw_asym_free);

    char* rho = nullptr;
    if (saw_status st = saw_asym_rho(a, &rho)) return die(st);
    CStr r = own(rho);
    char* alpha = nullptr;
    if (saw_status st = saw_asym_alpha(a, &alpha)) return die(st);
    CStr al = own(alpha);

    const char* which_names[2] = {"rho", "alpha"};
    const char* variant_names[2] = {"reference", "corrected"};
    double vals[2][2][3];
    for (int which = 0; which < 2; ++which)
        for (int variant = 0; variant < 2; ++variant)
            if (saw_status st = saw_asym_check(
                    a, which, variant, &vals[which][variant][0],
                    &vals[which][variant][1], &vals[which][variant][2]))
                return die(st);

    std::string text;
    if (o.format == "csv") {
        text =
            "k,rho,alpha,rho_reference_ratio,rho_corrected_ratio,"
            "alpha_reference_ratio,alpha_corrected_ratio\n";
        text += std::to_string(o.k) + "," + r.get() + "," + al.get() + "," +
                fmt_double(vals[0][0][2]) + "," + fmt_double(vals[0][1][2]) +
                "," + fmt_double(vals[1][0][2]) + "," +
                fmt_double(vals[1][1][2]) + "\n";
    } else {
        json j;
        j["k"] = o.k;
        j["rho"] = r.get();
        j["alpha"] = al.get();
        json checks;
        for (int which = 0; which < 2; ++which) {
            json per;
            for (int variant = 0; variant < 2; ++variant) {
                json c;
                c["residual"] = vals[which][variant][0];
                c["next_order"] = vals[which][variant][1];
                c["ratio"] = vals[which][variant][2];
                per[variant_names[variant]] = c;
            }
            checks[which_names[which]] = per;
        }
        j["checks"] = checks;
        text = j.dump() + "\n";
    }
    return write_output(text, o.out);
}

int cmd_bounds(const Options& o) {
    saw_bounds* b = nullptr;
    if (saw_status st = saw_bounds_new(o.kmax, &b)) return die(st);
    std::unique_ptr<saw_bounds, void (*)(saw_bounds*)> owner(b,
                                                             &saw_bounds_free);

    double lam = 0, beta = 0;
    if (saw_status st = saw_bounds_values(b, &lam, &beta)) return die(st);
    const int rows = saw_bounds_rows(b);

    std::string text;
    if (o.format == "csv") {
        text = "k,count,weighted_sum\n";
        for (int k = 1; k <= rows; ++k) {
            char *count = nullptr, *ws = nullptr;
            if (saw_status st = saw_bounds_row(b, k, &count, &ws))
                return die(st);
            CStr c = own(count), w = own(ws);
            text += std::to_string(k) + "," + c.get() + "," + w.get() + "\n";
        }
        text += "lambda_lb," + fmt_double(lam) + ",\n";
        text += "beta_lb," + fmt_double(beta) + ",\n";
    } else {
        json j;
        j["kmax"] = o.kmax;
        j["lambda_lb"] = lam;
        j["beta_lb"] = beta;
        json table = json::array();
        for (int k = 1; k <= rows; ++k) {
            char *count = nullptr, *ws = nullptr;
            if (saw_status st = saw_bounds_row(b, k, &count, &ws))
                return die(st);
            CStr c = own(count), w = own(ws);
            json row;
            row["k"] = k;
            row["count"] = c.get();
            row["weighted_sum"] = w.get();
            table.push_back(row);
        }
        j["rows"] = table;
        text = j.dump() + "\n";
    }
    return write_output(text, o.out);
}

int cmd_render(const Options& o) {
    char* svg = nullptr;
    if (o.exhaustive) {
        if (o.model != SAW_MODEL_CROSSING) {
            std::cerr << "error: --exhaustive renders crossing walks only\n";
            return 1;
        }
        if (saw_status st =
                saw_render_crossing_walks(o.k, o.cell, o.columns, &svg))
            return die(st);
    } else {
        saw_run* run = nullptr;
        if (saw_status st =
                saw_run_new(o.model, o.k, o.l, o.length, o.n, o.seed, &run))
            return die(st);
        std::unique_ptr<saw_run, void (*)(saw_run*)> owner(run, &saw_run_free);
        if (saw_status st = saw_run_render(run, o.cell, o.columns, &svg))
            return die(st);
    }
    CStr s = own(svg);
    return write_output(s.get(), o.out);
}

void add_model_options(CLI::App* cmd, Options& o, bool with_n) {
    cmd->add_option("--model", o.model, "walk model")
        ->required()
        ->transform(CLI::CheckedTransformer(kModels, CLI::ignore_case));
    cmd->add_option("--k", o.k, "square or strip size");
    cmd->add_option("--l", o.l, "nes walk length");
    cmd->add_option("--length", o.length, "untrapped walk length");
    if (with_n) {
        cmd->add_option("--n", o.n, "number of samples")->required();
        cmd->add_option("--seed", o.seed, "random seed (default 0)");
    }
}

void add_output_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "output format (default json)")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", o.out, "write to file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Sequential importance sampling and exact analysis of "
        "self-avoiding lattice walks"};
    app.set_version_flag("--version", saw_version());
    app.require_subcommand(1);

    Options o;
    std::function<int()> action;

    CLI::App* sample = app.add_subcommand(
        "sample", "Draw walks and print one record per walk");
    add_model_options(sample, o, true);
    add_output_options(sample, o);
    sample->callback([&] { action = [&] { return cmd_sample(o); }; });

    CLI::App* estimate = app.add_subcommand(
        "estimate", "Estimate the walk count from n weighted samples");
    add_model_options(estimate, o, true);
    estimate
        ->add_option("--threads", o.threads,
                     "worker threads (default SAW_THREADS or 1)")
        ->envname("SAW_THREADS");
    add_output_options(estimate, o);
    estimate->callback([&] { action = [&] { return cmd_estimate(o); }; });

    CLI::App* moments = app.add_subcommand(
        "moments",
        "Exact E(X)^2 and E(X^2) tables from the generating functions");
    moments->add_option("--model", o.model, "nes or directed")
        ->required()
        ->transform(CLI::CheckedTransformer(kModels, CLI::ignore_case));
    moments->add_option("--k", o.k, "strip size (nes)");
    moments
        ->add_option("--lmax", o.lmax,
                     "last row: walk length for nes, square size for directed")
        ->required();
    add_output_options(moments, o);
    moments->callback([&] { action = [&] { return cmd_moments(o); }; });

    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "Exhaustive counts and weighted sums");
    enumerate->add_option("--model", o.model, "crossing, directed or nes")
        ->required()
        ->transform(CLI::CheckedTransformer(kModels, CLI::ignore_case));
    enumerate->add_option("--k", o.k, "square or strip size")->required();
    enumerate->add_option("--l", o.l, "nes walk length");
    add_output_options(enumerate, o);
    enumerate->callback([&] { action = [&] { return cmd_enumerate(o); }; });

    CLI::App* asym = app.add_subcommand(
        "asymptotics",
        "Dominant pole and residue of the second-moment generating function");
    asym->add_option("--k", o.k, "strip size (>= 2)")->required();
    add_output_options(asym, o);
    asym->callback([&] { action = [&] { return cmd_asymptotics(o); }; });

    CLI::App* bounds = app.add_subcommand(
        "bounds", "Growth-constant lower bounds from small enumerations");
    bounds->add_option("--kmax", o.kmax, "largest square size (default 3)");
    add_output_options(bounds, o);
    bounds->callback([&] { action = [&] { return cmd_bounds(o); }; });

    CLI::App* render = app.add_subcommand(
        "render", "SVG figure of sampled or exhaustively enumerated walks");
    add_model_options(render, o, false);
    o.n = 12;
    render->add_option("--n", o.n, "number of walks to sample (default 12)");
    render->add_option("--seed", o.seed, "random seed (default 0)");
    render->add_flag("--exhaustive", o.exhaustive,
                     "render every crossing walk instead of sampling");
    render->add_option("--cell", o.cell, "lattice spacing in pixels");
    render->add_option("--columns", o.columns, "panels per row");
    render->add_option("--out", o.out, "write to file instead of stdout");
    render->callback([&] { action = [&] { return cmd_render(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    return action ? action() : 1;
}
