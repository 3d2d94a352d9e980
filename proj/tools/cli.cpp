#include "cli.hpp"

#include "cl30/chain.hpp"
#include "cl30/d4.hpp"
#include "cl30/errors.hpp"
#include "cl30/json_io.hpp"
#include "cl30/matrix.hpp"
#include "cl30/parse.hpp"
#include "cl30/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

namespace cl30::cli {

namespace {

enum class Format { Text, Json };

std::string num(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << chop(x);
    return os.str();
}

std::string text(const Vec3& v) { return "(" + num(v[0]) + ", " + num(v[1]) + ", " + num(v[2]) + ")"; }

std::string text(const Cliffor& a) {
    std::string s = "[";
    for (std::size_t k = 0; k < 8; ++k) s += (k ? ", " : "") + num(a[k]);
    return s + "]";
}

std::string text(const Complex& z) {
    const double re = chop(z.real());
    const double im = chop(z.imag());
    if (im == 0.0) return num(re);
    if (re == 0.0) return num(im) + "i";
    return num(re) + (im < 0 ? "-" : "+") + num(std::abs(im)) + "i";
}

std::string text(const Matrix2& m) {
    return "[[" + text(m(0, 0)) + ", " + text(m(0, 1)) + "], [" + text(m(1, 0)) + ", " + text(m(1, 1)) + "]]";
}

std::string text(const AxisAngle& t) {
    std::ostringstream os;
    os << "axis  " << text(t.axis) << "\nangle " << num(t.angle) << " (" << num(t.angle / std::numbers::pi)
       << " pi)";
    if (t.degenerate) os << "\n(identity rotation; axis is arbitrary)";
    return os.str();
}

void emit(std::ostream& out, const json& j) { out << chop(j).dump() << '\n'; }

void print_table(std::ostream& out, const MultiplicationTable& t, Format format) {
    if (format == Format::Json) {
        emit(out, to_json(t));
        return;
    }
    constexpr int w = 6;
    out << std::left << std::setw(w) << "" << "|";
    for (D4Label h : kD4Labels) out << ' ' << std::setw(w - 1) << to_string(h);
    out << '\n' << std::string(w, '-') << '+' << std::string(kD4Order * w, '-') << '\n';
    for (D4Label g : kD4Labels) {
        out << std::setw(w) << to_string(g) << "|";
        for (D4Label h : kD4Labels) out << ' ' << std::setw(w - 1) << to_string(t[index_of(g)][index_of(h)]);
        out << '\n';
    }
}

json decomposition(const Matrix2& m) { return decomposition_to_json(m); }

void print_decomposition(std::ostream& out, const Matrix2& m, Format format, const std::string& ket) {
    if (format == Format::Json) {
        json j = decomposition(m);
        if (!ket.empty()) j["ket"] = ket;
        emit(out, j);
        return;
    }
    const auto c = decompose_fermion(m);
    out << "matrix  " << text(m) << '\n';
    if (!ket.empty()) out << "ket     " << ket << '\n';
    out << "fermion";
    for (int mu = 1; mu <= 2; ++mu) {
        for (int nu = 1; nu <= 2; ++nu) out << "  e" << mu << nu << "=" << text(c[mu - 1][nu - 1]);
    }
    out << "\ncliffor " << text(cliffor_from_matrix(m)) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& tol_override) {
    CLI::App app{"Cl(3,0) rotors, the dihedral group D4 and 2x2 matrices", "cl30"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* table = app.add_subcommand("table", "Print the D4 multiplication table (rows act first)");

    std::string theta1, theta2;
    auto* compose = app.add_subcommand("compose", "Compose two rotations: theta1 first, then theta2");
    compose->add_option("--theta1", theta1, "First rotation <axis>:<angle>")->required();
    compose->add_option("--theta2", theta2, "Second rotation <axis>:<angle>")->required();

    std::string theta, vector;
    auto* rotate = app.add_subcommand("rotate", "Rotate a vector by exp(-i theta/2) r exp(i theta/2)");
    rotate->add_option("--theta", theta, "Rotation <axis>:<angle>")->required();
    rotate->add_option("--vector", vector, "Vector [x1,x2,x3]")->required();

    std::string element_name, matrix_text;
    auto* apply = app.add_subcommand("apply", "Apply a D4 element or a right-acting matrix to a vector");
    auto* apply_element = apply->add_option("--element", element_name, "D4 element label");
    auto* apply_matrix = apply->add_option("--matrix", matrix_text, "Real right-acting matrix [[a,b],[c,d]]");
    apply_element->excludes(apply_matrix);
    apply->add_option("--vector", vector, "Vector [x1,x2,x3]")->required();

    std::string bra_name, ket_name;
    auto* decompose = app.add_subcommand("decompose", "Decompose a 2x2 matrix on the Fermion and Pauli bases");
    auto* dm = decompose->add_option("--matrix", matrix_text, "Matrix [[a,b],[c,d]]; entries real or [re,im]");
    auto* db = decompose->add_option("--bra", bra_name, "Left-acting D4 bra, given by its argument's label");
    auto* dk = decompose->add_option("--ket", ket_name, "D4 ket whose left-acting matrix is decomposed");
    dm->excludes(db)->excludes(dk);
    db->excludes(dk);

    bool with_campbell = false;
    auto* pauli = app.add_subcommand("pauli", "Show the Pauli matrices as rotation operators");
    pauli->add_flag("--campbell", with_campbell, "Also list Campbell's primary matrices");

    std::string steps;
    auto* chain = app.add_subcommand("chain", "Evaluate r A1|K1> A2|K2> ... left to right");
    chain->add_option("--vector", vector, "Operand: 3 numbers (vector) or 8 numbers (cliffor)")->required();
    chain->add_option("--steps", steps, "Steps: JSON array or 'scale:<c>;ket:<k>;...'");

    auto* verify = app.add_subcommand("verify", "Run the identity regression suite");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const Format format = format_name == "json" ? Format::Json : Format::Text;

    try {
        const double tol = tol_override ? parse_tolerance(*tol_override) : kDefaultTolerance;

        if (*table) {
            print_table(out, tol == kDefaultTolerance ? multiplication_table() : compute_multiplication_table(tol), format);
        } else if (*compose) {
            const AxisAngle t = compose_axis_angle(parse_axis_angle(theta1), parse_axis_angle(theta2));
            if (format == Format::Json) {
                emit(out, to_json(t));
            } else {
                out << text(t) << '\n';
            }
        } else if (*rotate) {
            const Vec3 r = rotate_vector(exp_half(parse_axis_angle(theta)), parse_vec3(vector));
            if (format == Format::Json) {
                emit(out, to_json(r));
            } else {
                out << text(r) << '\n';
            }
        } else if (*apply) {
            const Vec3 r = parse_vec3(vector);
            Vec3 result;
            if (!element_name.empty()) {
                result = action_on_vector(label_from_string(element_name), r);
            } else if (!matrix_text.empty()) {
                result = apply_right(r, parse_real_matrix(matrix_text), tol);
            } else {
                err << "error: apply needs --element or --matrix\n";
                return kUsage;
            }
            if (format == Format::Json) {
                emit(out, to_json(result));
            } else {
                out << text(result) << '\n';
            }
        } else if (*decompose) {
            if (!matrix_text.empty()) {
                print_decomposition(out, parse_matrix(matrix_text), format, "");
            } else if (!bra_name.empty() || !ket_name.empty()) {
                // A bra carries the inverse exponential of its ket: <g| r = r |g^{-1}>.
                const D4Label ket = bra_name.empty() ? label_from_string(ket_name)
                                                     : bra_argument(label_from_string(bra_name));
                print_decomposition(out, transpose(d4_matrix_of(ket)).to_complex(), format,
                                    std::string{to_string(ket)});
            } else {
                err << "error: decompose needs --matrix, --bra or --ket\n";
                return kUsage;
            }
        } else if (*pauli) {
            if (format == Format::Json) {
                json list = json::array();
                for (const auto& p : pauli_matrices()) {
                    list.push_back({{"name", "sigma" + std::to_string(p.index)},
                                    {"matrix", to_json(p.value)},
                                    {"ket", std::string{to_string(p.ket)}},
                                    {"bra", std::string{to_string(p.bra)}},
                                    {"factor", json::array({p.factor.real(), p.factor.imag()})},
                                    {"rotation", to_json(p.rotation)},
                                    {"reading", p.reading}});
                }
                json doc{{"pauli", list}};
                if (with_campbell) {
                    json c = json::array();
                    for (const auto& m : campbell_matrices()) {
                        c.push_back({{"name", m.name},
                                     {"matrix", to_json(m.value)},
                                     {"ket", std::string{to_string(m.ket)}},
                                     {"bra", std::string{to_string(m.bra)}},
                                     {"planar_negative", std::string{to_string(m.planar_negative)}}});
                    }
                    doc["campbell"] = c;
                }
                emit(out, doc);
            } else {
                for (const auto& p : pauli_matrices()) {
                    out << "sigma" << p.index << " = " << text(p.value) << "  = "
                        << (p.factor == Complex{1.0, 0.0} ? "" : "i ") << "<" << to_string(p.bra)
                        << "| ; r|" << to_string(p.ket) << ">: " << p.reading << '\n';
                }
                if (with_campbell) {
                    for (const auto& m : campbell_matrices()) {
                        out << "|" << m.name << "| = " << text(m.value) << "  = <" << to_string(m.bra) << "| == -<"
                            << to_string(bra_argument(m.planar_negative)) << "| on the xy-plane\n";
                    }
                }
            }
        } else if (*chain) {
            const Cliffor result = eval_chain(KetChainExpr{parse_operand(vector), parse_chain_steps(steps)});
            if (format == Format::Json) {
                emit(out, to_json(result));
            } else {
                out << text(result) << '\n';
            }
        } else if (*verify) {
            const auto checks = run_identity_suite(tol);
            const bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
            if (format == Format::Json) {
                json list = json::array();
                for (const auto& c : checks) {
                    list.push_back({{"name", c.name}, {"passed", c.passed}, {"max_error", c.max_error},
                                    {"tolerance", c.tolerance}});
                }
                out << json{{"passed", ok}, {"checks", list}}.dump() << '\n';
            } else {
                for (const auto& c : checks) {
                    out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  (max error " << c.max_error
                        << ", tolerance " << c.tolerance << ")\n";
                }
                out << (ok ? "all identities hold" : "identity suite FAILED") << '\n';
            }
            return ok ? kOk : kCheckFailed;
        }
    } catch (const UnknownLabel& e) {
        err << "error: " << e.what() << '\n';
        return kUnknownLabel;
    } catch (const MalformedInput& e) {
        err << "error: " << e.what() << '\n';
        return kMalformedInput;
    } catch (const NonPlanarVector& e) {
        err << "error: " << e.what() << '\n';
        return kNonPlanarVector;
    } catch (const MixedBraKetChain& e) {
        err << "error: " << e.what() << '\n';
        return kMixedBraKetChain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidArgument;
    }
    return kOk;
}

}  // namespace cl30::cli
