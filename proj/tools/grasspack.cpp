#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grasspack/analysis.hpp"
#include "grasspack/construct.hpp"
#include "grasspack/generators.hpp"
#include "grasspack/jsonio.hpp"
#include "grasspack/model.hpp"

namespace {

using namespace grasspack;

// Best rational p/q with q <= 10000 whose value lies within 10 * tol of x,
// found by walking the continued-fraction convergents. Returns "p/q" (or the
// bare integer) for display next to the float, never in place of it.
std::optional<std::string> snap_fraction(double x, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    const double ax = std::abs(x);
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = ax;
    for (int iter = 0; iter < 64; ++iter) {
        const double fa = std::floor(frac);
        const double p2d = fa * static_cast<double>(p1) + static_cast<double>(p0);
        const double q2d = fa * static_cast<double>(q1) + static_cast<double>(q0);
        if (q2d > 10000.0 || p2d > 1e15) break;
        const auto a = static_cast<long long>(fa);
        const long long p2 = a * p1 + p0;
        const long long q2 = a * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const double rem = frac - fa;
        if (rem < 1e-12) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return std::nullopt;
    const double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(approx - ax) >= 10.0 * tol) return std::nullopt;
    std::string s;
    if (x < 0 && p1 != 0) s += '-';
    s += std::to_string(p1);
    if (q1 != 1 && p1 != 0) s += '/' + std::to_string(q1);
    return s;
}

std::string describe(const Packing& p) {
    return std::string("Gr(") + (p.field() == FieldTag::Real ? "R" : "C") +
           ", " + std::to_string(p.ambient_dim()) + ", " +
           std::to_string(p.dim()) + "), " + std::to_string(p.size()) +
           " subspaces";
}

FieldTag parse_field(const std::string& f) {
    return f == "C" ? FieldTag::Complex : FieldTag::Real;
}

struct Options {
    double tol_value = 1e-9;
    bool verbose = false;

    Tolerance tol() const { return Tolerance(tol_value); }
};

void verbose_report(const CertificationReport& r) {
    std::cerr << "tight: " << (r.tight_bound ? "yes" : "no");
    if (r.tight_bound) std::cerr << " (A = " << *r.tight_bound << ")";
    std::cerr << "\nequichordal: " << (r.equichordal.holds ? "yes" : "no")
              << "\nstrongly simplicial: "
              << (r.strongly_simplicial.holds ? "yes" : "no")
              << "\nequiisoclinic: " << (r.equiisoclinic.holds ? "yes" : "no")
              << "\nregime: " << regime_name(r.regime) << "\n";
}

void cmd_gen(const Options& opt, const std::string& name,
             const std::string& field, std::int64_t k, std::int64_t m,
             std::int64_t n, std::uint64_t seed, const std::string& out) {
    auto require = [&name](bool given, const char* flag) {
        if (!given) {
            throw ValidationError("gen " + name + " requires " + flag);
        }
    };
    Packing p = [&] {
        if (name == "hadamard-etf") return hadamard_etf();
        if (name == "hadamard-complement") return hadamard_complement();
        if (name == "mub-c2") return mub_c2();
        if (name == "onb-lines") {
            require(k > 0, "--k");
            return onb_lines(parse_field(field), static_cast<std::size_t>(k));
        }
        require(k > 0, "--k");
        require(m > 0, "--m");
        require(n > 0, "--n");
        return random_packing(parse_field(field), static_cast<std::size_t>(k),
                              static_cast<std::size_t>(m),
                              static_cast<std::size_t>(n), Seed{seed});
    }();
    save_packing(out, p);
    if (opt.verbose) std::cerr << "wrote " << describe(p) << " to " << out << "\n";
}

void cmd_check(const Options& opt, const std::string& in) {
    const Packing p = load_packing(in, opt.tol());
    const CertificationReport r = certify(p, opt.tol());

    JsonWriter w;
    w.begin_object();
    write_report_fields(w, r);

    w.key("fractions").begin_object();
    auto put = [&](const char* key, const std::optional<double>& v) {
        if (!v) return;
        if (auto f = snap_fraction(*v, opt.tol_value)) w.key(key).value(*f);
    };
    put("tight_bound", r.tight_bound);
    put("equichordal", r.equichordal.value);
    put("equiisoclinic", r.equiisoclinic.value);
    put("min_chordal_sq", std::isfinite(r.min_chordal_sq)
                              ? std::optional<double>(r.min_chordal_sq)
                              : std::nullopt);
    put("simplex_bound", r.simplex_bound);
    put("orthoplex_bound", r.orthoplex_bound);
    if (r.strongly_simplicial.value) {
        std::vector<std::string> snapped;
        for (double e : *r.strongly_simplicial.value) {
            auto f = snap_fraction(e, opt.tol_value);
            if (!f) break;
            snapped.push_back(*f);
        }
        if (snapped.size() == r.strongly_simplicial.value->size()) {
            w.key("strongly_simplicial_spectrum").begin_array();
            for (const std::string& f : snapped) w.value(f);
            w.end_array();
        }
    }
    w.end_object();

    w.end_object();
    std::cout << w.str() << "\n";
    if (opt.verbose) {
        std::cerr << "checked " << describe(p) << "\n";
        verbose_report(r);
    }
}

void cmd_bounds(const Options& opt, const std::string& field, std::int64_t k,
                std::int64_t m, std::int64_t n) {
    if (n < 1) {
        throw ValidationError("bounds: n must be >= 1, got " + std::to_string(n));
    }
    const FieldTag f = parse_field(field);
    const std::int64_t z = gerzon_bound(f, k);
    const double ortho = orthoplex_bound(k, m);
    std::optional<double> simplex;
    if (n >= 2) simplex = simplex_bound(k, m, n);
    const Regime regime = n <= z ? Regime::SimplexApplies
                          : n <= 2 * (z - 1) ? Regime::OrthoplexApplies
                                             : Regime::BeyondOrthoplex;

    JsonWriter w;
    w.begin_object();
    w.key("gerzon").value(z);
    w.key("simplex");
    if (simplex) {
        w.value(*simplex);
    } else {
        w.null();
    }
    w.key("orthoplex").value(ortho);
    w.key("regime").value(regime_name(regime));
    w.end_object();
    std::cout << w.str() << "\n";
    (void)opt;
}

void cmd_tensor(const Options& opt, const std::string& in,
                const std::string& unitaries_path, std::int64_t r,
                std::uint64_t seed, const std::string& out) {
    const Packing p = load_packing(in, opt.tol());
    UnitaryList us;
    if (!unitaries_path.empty()) {
        us = load_unitary_list(unitaries_path);
    } else if (r > 0) {
        us = random_unitaries(p.field(), static_cast<std::size_t>(r), p.size(),
                              Seed{seed});
    } else {
        throw ValidationError("tensor requires --unitaries or --r");
    }
    const Packing result = tensor_with_unitaries(p, us, opt.tol());
    save_packing(out, result);
    if (opt.verbose) {
        std::cerr << "wrote " << describe(result) << " to " << out << "\n";
    }
}

void cmd_tensor2(const Options& opt, const std::string& in1,
                 const std::string& in2, const std::string& out) {
    const Packing p = load_packing(in1, opt.tol());
    const Packing q = load_packing(in2, opt.tol());
    const Packing result = tensor_packings(p, q, opt.tol());
    save_packing(out, result);
    if (opt.verbose) {
        std::cerr << "wrote " << describe(result) << " to " << out << "\n";
    }
}

void cmd_complement(const Options& opt, const std::string& in,
                    const std::string& out) {
    const Packing p = load_packing(in, opt.tol());
    const Packing result = complement(p, opt.tol());
    save_packing(out, result);
    if (opt.verbose) {
        std::cerr << "wrote " << describe(result) << " to " << out << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct, transform, and certify packings of equal-dimensional "
                 "subspaces"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--tol", opt.tol_value,
                   "Absolute tolerance for every numerical check")
        ->capture_default_str();
    app.add_flag("--verbose", opt.verbose, "Human-readable summary on stderr");

    std::string gen_name, gen_field = "R", gen_out;
    std::int64_t gen_k = 0, gen_m = 0, gen_n = 0;
    std::uint64_t gen_seed = 0;
    CLI::App* gen = app.add_subcommand("gen", "Generate a packing file");
    gen->add_option("name", gen_name, "Packing family")
        ->required()
        ->check(CLI::IsMember({"hadamard-etf", "hadamard-complement",
                               "onb-lines", "mub-c2", "random"}));
    gen->add_option("--field", gen_field, "Scalar field")
        ->check(CLI::IsMember({"R", "C"}));
    gen->add_option("--k", gen_k, "Ambient dimension");
    gen->add_option("--m", gen_m, "Subspace dimension");
    gen->add_option("--n", gen_n, "Number of subspaces");
    gen->add_option("--seed", gen_seed, "Random seed");
    gen->add_option("-o,--out", gen_out, "Output file")->required();

    std::string check_in;
    CLI::App* check = app.add_subcommand(
        "check", "Certify a packing file; report JSON goes to stdout");
    check->add_option("input", check_in, "Packing file")->required();

    std::string bounds_field;
    std::int64_t bounds_k = 0, bounds_m = 0, bounds_n = 0;
    CLI::App* bounds =
        app.add_subcommand("bounds", "Print packing bounds for parameters");
    bounds->add_option("--field", bounds_field, "Scalar field")
        ->required()
        ->check(CLI::IsMember({"R", "C"}));
    bounds->add_option("--k", bounds_k, "Ambient dimension")->required();
    bounds->add_option("--m", bounds_m, "Subspace dimension")->required();
    bounds->add_option("--n", bounds_n, "Number of subspaces")->required();

    std::string tensor_in, tensor_unitaries, tensor_out;
    std::int64_t tensor_r = 0;
    std::uint64_t tensor_seed = 0;
    CLI::App* tensor = app.add_subcommand(
        "tensor", "Inflate each subspace by a unitary via Kronecker product");
    tensor->add_option("input", tensor_in, "Packing file")->required();
    auto* opt_r = tensor->add_option("--r", tensor_r, "Random unitary size");
    auto* opt_seed =
        tensor->add_option("--random-seed", tensor_seed, "Seed for --r");
    tensor->add_option("--unitaries", tensor_unitaries, "Unitary list file")
        ->excludes(opt_r)
        ->excludes(opt_seed);
    tensor->add_option("-o,--out", tensor_out, "Output file")->required();

    std::string t2_in1, t2_in2, t2_out;
    CLI::App* tensor2 = app.add_subcommand(
        "tensor2", "Kronecker product of two packing files, index by index");
    tensor2->add_option("input1", t2_in1, "First packing file")->required();
    tensor2->add_option("input2", t2_in2, "Second packing file")->required();
    tensor2->add_option("-o,--out", t2_out, "Output file")->required();

    std::string comp_in, comp_out;
    CLI::App* comp = app.add_subcommand(
        "complement", "Orthogonal complement of every subspace");
    comp->add_option("input", comp_in, "Packing file")->required();
    comp->add_option("-o,--out", comp_out, "Output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        opt.tol();  // validate before any command runs
        if (gen->parsed()) {
            cmd_gen(opt, gen_name, gen_field, gen_k, gen_m, gen_n, gen_seed,
                    gen_out);
        } else if (check->parsed()) {
            cmd_check(opt, check_in);
        } else if (bounds->parsed()) {
            cmd_bounds(opt, bounds_field, bounds_k, bounds_m, bounds_n);
        } else if (tensor->parsed()) {
            cmd_tensor(opt, tensor_in, tensor_unitaries, tensor_r, tensor_seed,
                       tensor_out);
        } else if (tensor2->parsed()) {
            cmd_tensor2(opt, t2_in1, t2_in2, t2_out);
        } else if (comp->parsed()) {
            cmd_complement(opt, comp_in, comp_out);
        }
        return 0;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
}
