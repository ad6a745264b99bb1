#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nhs/nhs.hpp>

namespace {

constexpr int kExitViolations = 1;
constexpr int kExitParse = 2;
constexpr int kExitInternal = 3;
constexpr int kExitUnsupported = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw nhs::ParseError(0, 0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& out_path, const std::string& data) {
    if (out_path.empty()) {
        std::cout << data;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << data;
}

int print_violations(const std::vector<nhs::Violation>& vs) {
    for (const auto& v : vs) std::cout << nhs::format_violation(v) << "\n";
    return vs.empty() ? 0 : kExitViolations;
}

struct Options {
    std::string input;
    std::string numbering_path;
    std::string out_path;
    int max_level = -1;
    bool brute_force = false;
};

nhs::Numbering load_numbering(const nhs::CurveComplex& c, const Options& opt) {
    nhs::Numbering n = nhs::parse_numbering(c, read_file(opt.numbering_path));
    nhs::require_numbering_domain(c, n);
    return n;
}

int run(const std::string& cmd, const Options& opt) {
    nhs::CurveComplex c = nhs::parse_complex(read_file(opt.input));
    nhs::Incidence inc = nhs::analyze(c);

    if (cmd == "validate") {
        auto vs = nhs::validate_structure(c, inc);
        if (vs.empty() && !opt.numbering_path.empty()) {
            nhs::Numbering n = load_numbering(c, opt);
            vs = nhs::validate_numbering(c, inc, n);
        }
        return print_violations(vs);
    }

    auto structural = nhs::validate_structure(c, inc);
    if (!structural.empty()) return print_violations(structural);

    if (cmd == "enumerate") {
        auto ns = opt.brute_force
                      ? nhs::brute_force_numberings(c, inc, opt.max_level)
                      : nhs::enumerate_numberings(c, inc, opt.max_level);
        write_output(opt.out_path, nhs::serialize_numbering_set(c, ns));
        return 0;
    }

    nhs::Numbering n = load_numbering(c, opt);
    auto nv = nhs::validate_numbering(c, inc, n);
    if (!nv.empty()) return print_violations(nv);

    if (cmd == "render") {
        write_output(opt.out_path, nhs::render_svg(c, n));
        return 0;
    }

    nhs::SheetComplex s = nhs::reconstruct(c, n);
    auto problems = nhs::surface_check(s);
    if (!problems.empty()) {
        for (const auto& p : problems) std::cerr << "error: " << p << "\n";
        return kExitInternal;
    }
    nhs::SurfaceInvariants inv = nhs::invariants(s);

    std::string out;
    if (cmd == "reconstruct")
        out += nhs::format_boundary_trace(s, nhs::trace_boundary(s));
    out += nhs::format_invariants(inv) + "\n";
    write_output(opt.out_path, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"surface engine for curve systems with sheet counts"};
    app.require_subcommand(1);

    Options opt;
    std::string cmd;
    auto add_common = [&](CLI::App* sub, bool needs_numbering,
                          bool takes_numbering, bool needs_level,
                          bool takes_brute, bool takes_out) {
        sub->add_option("input", opt.input, "complex file")->required();
        if (needs_numbering)
            sub->add_option("--numbering", opt.numbering_path, "numbering file")
                ->required();
        else if (takes_numbering)
            sub->add_option("--numbering", opt.numbering_path, "numbering file");
        if (needs_level)
            sub->add_option("--max-level", opt.max_level, "largest sheet count")
                ->required();
        if (takes_brute)
            sub->add_flag("--brute-force", opt.brute_force,
                          "scan all value vectors instead of searching");
        if (takes_out)
            sub->add_option("-o,--output", opt.out_path, "output file");
        sub->callback([&cmd, sub] { cmd = sub->get_name(); });
    };
    add_common(app.add_subcommand("validate", "report violations"), false, true,
               false, false, false);
    add_common(app.add_subcommand("enumerate", "list valid numberings"), false,
               false, true, true, true);
    add_common(app.add_subcommand("reconstruct",
                                  "assemble the surface and trace its boundary"),
               true, false, false, false, true);
    add_common(app.add_subcommand("invariants", "surface invariants"), true,
               false, false, false, true);
    add_common(app.add_subcommand("render", "draw the projection as SVG"), true,
               false, false, false, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        return run(cmd, opt);
    } catch (const nhs::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const nhs::RenderUnsupported& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
