// Command-line front end: apply operators, compute kernels, run the
// verification suites and aggregate their reports.

#include "sympspin/parse.hpp"
#include "sympspin/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace fs = std::filesystem;
using namespace sympspin;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

std::string read_input(const std::string& source) {
    if (source == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(source);
    if (!in) {
        throw Error("cannot read input file '" + source + "'");
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Drops '#' comment lines so the text output of apply can be fed back in.
std::string strip_comments(const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t");
        if (first != std::string::npos && line[first] != '#') {
            out += line;
            out += '\n';
        }
    }
    return out;
}

// Writes to <dir>/<name> when a directory is given, otherwise to stdout.
std::string emit(const std::string& dir, const std::string& name, const std::string& text) {
    if (dir.empty()) {
        std::cout << text;
        return {};
    }
    fs::create_directories(dir);
    fs::path path = fs::path(dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write '" + path.string() + "'");
    }
    out << text;
    return path.string();
}

struct Options {
    int n = 2;
    int h = 3;
    int Q = 4;
    std::string parity = "both";
    std::string op;
    std::string input;
    std::string expr;
    std::string suites = "all";
    std::string format;
    std::string out;
};

int run_apply(const Options& o) {
    std::string text = !o.expr.empty() ? o.expr : strip_comments(read_input(o.input.empty() ? "-" : o.input));
    SpinorPoly s = parse_spinor(text, o.n);
    OperatorPipeline op = parse_operator(o.op, o.n);
    std::vector<SpinorPoly> images = op.apply(s);
    Format f = o.format.empty() ? Format::Text : parse_format(o.format);
    std::ostringstream out;
    if (f == Format::Json) {
        Json doc;
        doc["convention"] = kConventionNote;
        doc["n"] = o.n;
        doc["op"] = o.op;
        doc["input"] = s.str();
        Json comps = Json::array();
        for (const auto& p : images) {
            comps.push_back(p.str());
        }
        doc["components"] = comps;
        out << doc.dump(2) << "\n";
    } else if (f == Format::Csv) {
        out << "component,spinor\n";
        for (std::size_t k = 0; k < images.size(); ++k) {
            out << k + 1 << ",\"" << images[k].str() << "\"\n";
        }
    } else {
        out << "# " << kConventionNote << "\n";
        if (!op.vectorValued) {
            out << images.front().str() << "\n";
        } else {
            for (std::size_t k = 0; k < images.size(); ++k) {
                out << "component " << k + 1 << ": " << images[k].str() << "\n";
            }
        }
    }
    emit(o.out, "apply." + format_extension(f), out.str());
    return kPass;
}

int run_kernel(const Options& o) {
    SectorSpec spec{o.n, o.h, o.Q, parse_parity(o.parity)};
    if (spec.h < 0 || spec.Q < 0) {
        throw Error("--h and --Q must be >= 0");
    }
    OperatorPipeline op = parse_operator(o.op.empty() ? "Ds" : o.op, o.n);
    auto domain = std::make_shared<const GradedBasis>(enumerate_basis(spec));

    // Common codomain: the largest q-raise over the components.
    GradingSignature sig = op.components.front().grading();
    for (const auto& c : op.components) {
        sig.qRaise = std::max(sig.qRaise, c.grading().qRaise);
    }
    SectorSpec target = image_sector(spec, sig);
    SubspaceBasis ker = SubspaceBasis::full(domain);
    if (target.h >= 0) {
        std::vector<PolyMap> maps;
        for (const auto& c : op.components) {
            maps.emplace_back([c](const SpinorPoly& s) { return c.apply(s); });
        }
        ker = kernel_basis(stacked_operator_matrix(maps, *domain, enumerate_basis(target)), domain);
    }

    Format f = o.format.empty() ? Format::Text : parse_format(o.format);
    std::ostringstream out;
    if (f == Format::Json) {
        Json doc;
        doc["convention"] = kConventionNote;
        doc["op"] = o.op.empty() ? "Ds" : o.op;
        doc["sector"] = sector_to_json(spec);
        doc["dim"] = ker.dim();
        Json basis = Json::array();
        for (const auto& p : ker.polys()) {
            basis.push_back(p.str());
        }
        doc["basis"] = basis;
        doc["subspace"] = subspace_to_json(ker);
        out << doc.dump(2) << "\n";
    } else if (f == Format::Csv) {
        out << "index,spinor\n";
        std::size_t k = 0;
        for (const auto& p : ker.polys()) {
            out << ++k << ",\"" << p.str() << "\"\n";
        }
    } else {
        out << "# " << kConventionNote << "\n";
        out << "sector " << spec.str() << " (dim " << domain->size() << ")\n";
        out << "kernel of " << (o.op.empty() ? "Ds" : o.op) << "\n";
        out << "dim " << ker.dim() << "\n";
        for (const auto& p : ker.polys()) {
            out << "  " << p.str() << "\n";
        }
    }
    emit(o.out, "kernel." + format_extension(f), out.str());
    return kPass;
}

int run_verify(const Options& o) {
    JobConfig cfg;
    cfg.n = o.n;
    cfg.hMax = o.h;
    cfg.Q = o.Q;
    cfg.parity = parse_parity(o.parity);
    cfg.suites = parse_suites(o.suites);
    cfg.format = o.format.empty() ? Format::Json : parse_format(o.format);
    cfg.outputPath = o.out;
    cfg.validate();

    std::vector<VerificationReport> reports = run_suites(cfg);
    bool pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
    std::string path = emit(cfg.outputPath, "report." + format_extension(cfg.format),
                            render_reports(cfg, reports, cfg.format));
    if (!path.empty()) {
        std::cout << render_reports(cfg, reports, Format::Text);
        std::cout << "report written to " << path << "\n";
    }
    if (!pass) {
        std::cerr << "verification failed";
        if (!path.empty()) {
            std::cerr << "; see " << path;
        }
        std::cerr << "\n";
    }
    return pass ? kPass : kFail;
}

int run_report(const Options& o, const std::vector<std::string>& inputs) {
    std::vector<Json> docs;
    for (const auto& source : inputs) {
        docs.push_back(Json::parse(read_input(source)));
    }
    if (docs.empty()) {
        docs.push_back(Json::parse(read_input("-")));
    }
    Format f = o.format.empty() ? Format::Csv : parse_format(o.format);
    emit(o.out, "tables." + format_extension(f), render_tables(aggregate(docs), f));
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with polynomial symplectic spinors"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);
    Options o;
    std::vector<std::string> reportInputs;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "rank n (x1..x{2n}, q1..qn)")->check(CLI::Range(1, kMaxRank));
        sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", o.out, "output directory (default: stdout)");
    };
    auto add_sector = [&](CLI::App* sub) {
        sub->add_option("--hmax,--h", o.h, "x-homogeneity (maximum for verify)")->check(CLI::NonNegativeNumber);
        sub->add_option("--Q", o.Q, "bound on total q-degree")->check(CLI::NonNegativeNumber);
        sub->add_option("--parity", o.parity, "q-parity")->check(CLI::IsMember({"even", "odd", "both"}));
    };

    CLI::App* apply = app.add_subcommand("apply", "apply an operator word to a spinor");
    add_common(apply);
    apply->add_option("--op", o.op, "operator word, e.g. 'Ds Xs', 'Ts', 'mp(X,1,2)'")->required();
    apply->add_option("--input", o.input, "file holding the spinor, or - for stdin");
    apply->add_option("--expr", o.expr, "spinor given inline");

    CLI::App* kernel = app.add_subcommand("kernel", "kernel of an operator on a sector");
    add_common(kernel);
    add_sector(kernel);
    kernel->add_option("--op", o.op, "operator word (default Ds)");

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify);
    add_sector(verify);
    verify->add_option("--suites", o.suites, "comma-separated suites or 'all'");

    CLI::App* report = app.add_subcommand("report", "aggregate verification reports into dimension tables");
    add_common(report);
    report->add_option("--input", reportInputs, "report JSON files, or - for stdin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*apply) {
            return run_apply(o);
        }
        if (*kernel) {
            return run_kernel(o);
        }
        if (*verify) {
            return run_verify(o);
        }
        return run_report(o, reportInputs);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed report: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
