// Command-line front end over the cornercurves C API.
//
// Subcommands: exact, dubins, baseline, discrete, report. Exit codes:
// 0 success, 2 infeasible instance or inadmissible request, 1 for I/O,
// argument or validation failures.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cornercurves.h"

namespace {

constexpr int kCsvSamples = 1000;
const std::vector<int> kReportSweep = {2, 5, 10, 50, 100, 300};

int exit_code_of(cc_status status) {
    switch (status) {
        case CC_OK:
            return 0;
        case CC_ERROR_PARALLEL_TANGENTS:
        case CC_ERROR_DEGENERATE_CORNER:
        case CC_ERROR_INFEASIBLE_GEOMETRY:
        case CC_ERROR_NONPOSITIVE_B_TILDE:
        case CC_ERROR_RADIUS_TOO_LARGE:
        case CC_ERROR_DISCRETE_INFEASIBLE:
            return 2;
        default:
            return 1;
    }
}

int report_failure(cc_status status) {
    const std::string message = cc_last_error_message();
    // Error messages from the library already start with the status name.
    if (message.rfind(cc_status_name(status), 0) == 0)
        std::cerr << "error: " << message << "\n";
    else
        std::cerr << "error: " << cc_status_name(status) << ": " << message << "\n";
    return exit_code_of(status);
}

struct InstanceDeleter {
    void operator()(cc_instance* p) const { cc_instance_free(p); }
};
struct PathDeleter {
    void operator()(cc_path* p) const { cc_path_free(p); }
};
struct ChainDeleter {
    void operator()(cc_chain* p) const { cc_chain_free(p); }
};
using InstancePtr = std::unique_ptr<cc_instance, InstanceDeleter>;
using PathPtr = std::unique_ptr<cc_path, PathDeleter>;
using ChainPtr = std::unique_ptr<cc_chain, ChainDeleter>;

std::string take_string(char* text) {
    std::string out = text ? text : "";
    cc_string_free(text);
    return out;
}

struct CommonOptions {
    std::string instance_path;
    std::string out_path;
    std::string format = "json";
    double tol = 1e-9;
};

int load_instance(const std::string& path, InstancePtr* out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: IoFailure: cannot read instance file '" << path << "'\n";
        return 1;
    }
    std::ostringstream text;
    text << in.rdbuf();
    cc_instance* raw = nullptr;
    const cc_status status = cc_instance_parse_json(text.str().c_str(), &raw);
    if (status != CC_OK) return report_failure(status);
    out->reset(raw);
    return 0;
}

int write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: IoFailure: cannot open output file '" << out_path << "'\n";
        return 1;
    }
    out << text;
    return 0;
}

// Every curve is validated against the instance before it is written out.
int gate_on_validation(const cc_path* path, const cc_instance* inst, double tol) {
    int passed = 0;
    char* detail = nullptr;
    const cc_status status = cc_path_validate(path, inst, tol, &passed, &detail);
    if (status != CC_OK) return report_failure(status);
    const std::string why = take_string(detail);
    if (!passed) {
        std::cerr << "error: refusing to export an inadmissible curve: " << why << "\n";
        return 1;
    }
    return 0;
}

nlohmann::json path_summary(const cc_path* path) {
    double length = 0, min_radius = 0, turning = 0;
    int pieces = 0;
    cc_path_length(path, &length);
    cc_path_min_radius(path, &min_radius);
    cc_path_total_turning(path, &turning);
    cc_path_piece_count(path, &pieces);
    return {{"length", length},
            {"min_radius", min_radius},
            {"total_turning", turning},
            {"pieces", pieces}};
}

int emit_path(const CommonOptions& opt, const cc_instance* inst, const cc_path* path,
              double validate_tol, const nlohmann::json& doc) {
    if (int rc = gate_on_validation(path, inst, validate_tol); rc != 0) return rc;
    if (opt.format == "json") return write_output(opt.out_path, doc.dump(2) + "\n");
    if (opt.format == "csv") {
        int flipped = 0;
        cc_instance_get(inst, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr, &flipped);
        char* text = nullptr;
        const cc_status status = cc_path_csv(path, kCsvSamples, flipped, &text);
        if (status != CC_OK) return report_failure(status);
        return write_output(opt.out_path, take_string(text));
    }
    if (opt.format == "svg") {
        char* text = nullptr;
        const cc_status status = cc_path_svg(path, &text);
        if (status != CC_OK) return report_failure(status);
        return write_output(opt.out_path, take_string(text));
    }
    std::cerr << "error: InvalidArgument: unknown format '" << opt.format << "'\n";
    return 1;
}

int run_exact(const CommonOptions& opt) {
    InstancePtr inst;
    if (int rc = load_instance(opt.instance_path, &inst); rc != 0) return rc;
    cc_path* raw = nullptr;
    double r_a = 0, segment_length = 0;
    int case_tag = 0;
    const cc_status status = cc_exact_solve(inst.get(), &raw, &r_a, &case_tag, &segment_length);
    if (status != CC_OK) return report_failure(status);
    PathPtr path(raw);

    static const char* kCaseNames[] = {"segment-then-arc", "arc-then-segment", "pure-arc"};
    nlohmann::json doc = path_summary(path.get());
    doc["r_a"] = r_a;
    doc["case"] = kCaseNames[case_tag];
    doc["segment_length"] = segment_length;
    return emit_path(opt, inst.get(), path.get(), opt.tol, doc);
}

int run_dubins(const CommonOptions& opt, double radius) {
    InstancePtr inst;
    if (int rc = load_instance(opt.instance_path, &inst); rc != 0) return rc;
    cc_path* raw = nullptr;
    const cc_status status = cc_dubins_path(inst.get(), radius, &raw);
    if (status != CC_OK) return report_failure(status);
    PathPtr path(raw);
    nlohmann::json doc = path_summary(path.get());
    doc["radius"] = radius;
    return emit_path(opt, inst.get(), path.get(), opt.tol, doc);
}

int run_baseline(const CommonOptions& opt) {
    InstancePtr inst;
    if (int rc = load_instance(opt.instance_path, &inst); rc != 0) return rc;
    double min_radius = 0, t_min = 0;
    cc_status status = cc_parabola_min_radius(inst.get(), &min_radius, &t_min);
    if (status != CC_OK) return report_failure(status);

    if (opt.format == "json") {
        const nlohmann::json doc = {{"min_radius", min_radius}, {"t_min", t_min}};
        return write_output(opt.out_path, doc.dump(2) + "\n");
    }
    if (opt.format == "csv") {
        const int n = kCsvSamples;
        std::vector<double> xs(n), ys(n), s(n), phi(n), curvature(n);
        status = cc_parabola_samples(inst.get(), n, xs.data(), ys.data(), s.data(), phi.data(),
                                     curvature.data());
        if (status != CC_OK) return report_failure(status);
        std::ostringstream out;
        out << "s,x,y,phi,curvature\n";
        char buf[160];
        for (int i = 0; i < n; ++i) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", s[i], xs[i],
                          ys[i], phi[i], curvature[i]);
            out << buf;
        }
        return write_output(opt.out_path, out.str());
    }
    if (opt.format == "svg") {
        char* text = nullptr;
        status = cc_parabola_svg(inst.get(), &text);
        if (status != CC_OK) return report_failure(status);
        return write_output(opt.out_path, take_string(text));
    }
    std::cerr << "error: InvalidArgument: unknown format '" << opt.format << "'\n";
    return 1;
}

int run_discrete(const CommonOptions& opt, int p) {
    InstancePtr inst;
    if (int rc = load_instance(opt.instance_path, &inst); rc != 0) return rc;
    cc_chain* raw_chain = nullptr;
    cc_status status = cc_maxmin_chain(inst.get(), p, &raw_chain);
    if (status != CC_OK) return report_failure(status);
    ChainPtr chain(raw_chain);

    cc_path* raw_path = nullptr;
    status = cc_chain_path(chain.get(), inst.get(), &raw_path);
    if (status != CC_OK) return report_failure(status);
    PathPtr path(raw_path);
    // LP termination error dominates the closure, hence the looser gate.
    const double gate_tol = std::max(opt.tol, 1e-6);
    if (int rc = gate_on_validation(path.get(), inst.get(), gate_tol); rc != 0) return rc;

    int size = 0;
    double theta0 = 0, min_radius = 0, length = 0;
    cc_chain_size(chain.get(), &size);
    cc_chain_theta0(chain.get(), &theta0);
    cc_chain_min_radius(chain.get(), &min_radius);
    cc_chain_length(chain.get(), &length);

    if (opt.format == "json") {
        std::vector<double> radii(static_cast<size_t>(size));
        cc_chain_radii(chain.get(), radii.data());
        const nlohmann::json doc = {{"p", size},
                                    {"theta0", theta0},
                                    {"radii", radii},
                                    {"min_radius", min_radius},
                                    {"length", length}};
        return write_output(opt.out_path, doc.dump(2) + "\n");
    }
    if (opt.format == "csv") {
        char* text = nullptr;
        status = cc_chain_csv(chain.get(), &text);
        if (status != CC_OK) return report_failure(status);
        return write_output(opt.out_path, take_string(text));
    }
    if (opt.format == "svg") {
        char* text = nullptr;
        status = cc_path_svg(path.get(), &text);
        if (status != CC_OK) return report_failure(status);
        return write_output(opt.out_path, take_string(text));
    }
    std::cerr << "error: InvalidArgument: unknown format '" << opt.format << "'\n";
    return 1;
}

int run_report(const CommonOptions& opt) {
    InstancePtr inst;
    if (int rc = load_instance(opt.instance_path, &inst); rc != 0) return rc;

    if (opt.format == "svg") {
        char* text = nullptr;
        const cc_status status = cc_overlay_svg(inst.get(), kReportSweep.back(), &text);
        if (status != CC_OK) return report_failure(status);
        return write_output(opt.out_path, take_string(text));
    }
    if (opt.format != "json") {
        std::cerr << "error: InvalidArgument: report supports json or svg output\n";
        return 1;
    }

    double r_a = 0, segment_length = 0;
    int case_tag = 0;
    cc_path* raw_exact = nullptr;
    cc_status status = cc_exact_solve(inst.get(), &raw_exact, &r_a, &case_tag, &segment_length);
    if (status != CC_OK) return report_failure(status);
    PathPtr exact(raw_exact);
    double exact_length = 0;
    cc_path_length(exact.get(), &exact_length);

    double baseline = 0, t_min = 0;
    status = cc_parabola_min_radius(inst.get(), &baseline, &t_min);
    if (status != CC_OK) return report_failure(status);

    double mu = 0, nu = 0, delta = 0, b_tilde = 0;
    status = cc_instance_bounds(inst.get(), &mu, &nu, &delta, &b_tilde);
    if (status != CC_OK) return report_failure(status);

    std::map<std::string, double> min_radius_by_p;
    std::map<std::string, double> length_by_p;
    for (int p : kReportSweep) {
        cc_chain* raw_chain = nullptr;
        status = cc_maxmin_chain(inst.get(), p, &raw_chain);
        if (status != CC_OK) return report_failure(status);
        ChainPtr chain(raw_chain);
        double t_star = 0, length = 0;
        cc_chain_min_radius(chain.get(), &t_star);
        cc_chain_length(chain.get(), &length);
        min_radius_by_p[std::to_string(p)] = t_star;
        length_by_p[std::to_string(p)] = length;
    }

    const double ratio = r_a / baseline;
    std::printf("%-26s %.7g\n", "r_a", r_a);
    std::printf("%-26s %.7g\n", "baseline_min_radius", baseline);
    std::printf("%-26s %.7g\n", "improvement_ratio", ratio);
    std::printf("%-26s %.7g\n", "mu", mu);
    std::printf("%-26s %.7g\n", "nu", nu);
    std::printf("%-26s %.7g\n", "delta", delta);
    std::printf("%-26s %.7g\n", "b_tilde", b_tilde);
    std::printf("%-26s %.7g\n", "exact_length", exact_length);
    for (int p : kReportSweep)
        std::printf("t*(p=%-4d)                 %.7g\n", p,
                    min_radius_by_p[std::to_string(p)]);

    const nlohmann::json doc = {
        {"r_a", r_a},
        {"baseline_min_radius", baseline},
        {"improvement_ratio", ratio},
        {"bounds", {{"mu", mu}, {"nu", nu}, {"delta", delta}, {"b_tilde", b_tilde}}},
        {"lengths", {{"exact", exact_length}, {"discrete_by_p", length_by_p}}},
        {"discrete_min_radius_by_p", min_radius_by_p},
    };
    return write_output(opt.out_path, doc.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planar corner curves of nonnegative curvature: exact arc+segment optimum, "
                 "bounded-curvature family, parabola baseline and LP-optimized arc chains"};
    app.require_subcommand(1);

    CommonOptions opt;
    double radius = 0.0;
    int p = 300;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--instance", opt.instance_path, "instance JSON file")->required();
        cmd->add_option("--out", opt.out_path, "output file (stdout when omitted)");
        cmd->add_option("--format", opt.format, "svg|csv|json");
        cmd->add_option("--tol", opt.tol, "validation tolerance");
    };

    CLI::App* exact = app.add_subcommand("exact", "the arc+segment curve maximizing the "
                                                  "minimum radius of curvature");
    add_common(exact);
    CLI::App* dubins =
        app.add_subcommand("dubins", "bounded-curvature geodesic for a given radius");
    add_common(dubins);
    dubins->add_option("--radius", radius, "arc radius, in (0, r_a]")->required();
    CLI::App* baseline = app.add_subcommand("baseline", "quadratic Bezier reference curve");
    add_common(baseline);
    CLI::App* discrete =
        app.add_subcommand("discrete", "equal-angle arc chain maximizing the smallest radius");
    add_common(discrete);
    discrete->add_option("--p", p, "number of arcs")->required();
    CLI::App* report =
        app.add_subcommand("report", "solve everything and print a summary table plus JSON");
    add_common(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (exact->parsed()) return run_exact(opt);
    if (dubins->parsed()) return run_dubins(opt, radius);
    if (baseline->parsed()) return run_baseline(opt);
    if (discrete->parsed()) return run_discrete(opt, p);
    if (report->parsed()) return run_report(opt);
    return 1;
}
