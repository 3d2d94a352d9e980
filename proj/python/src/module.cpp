#include "cl30/chain.hpp"
#include "cl30/d4.hpp"
#include "cl30/group_algebra.hpp"
#include "cl30/matrix.hpp"
#include "cl30/parse.hpp"
#include "cl30/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>

namespace py = pybind11;
using namespace cl30;

namespace {

using List3 = std::array<double, 3>;
using List8 = std::array<double, 8>;
using ComplexRows = std::array<std::array<Complex, 2>, 2>;

Vec3 vec(const List3& v) { return {v[0], v[1], v[2]}; }
Cliffor cl(const List8& a) { return Cliffor{a}; }

std::map<std::string, double> terms(const GroupAlgebraElement& a) {
    std::map<std::string, double> out;
    for (D4Label g : kD4Labels) {
        if (a[g] != 0.0) out[std::string{to_string(g)}] = a[g];
    }
    return out;
}

GroupAlgebraElement element_from(const std::map<std::string, double>& m) {
    GroupAlgebraElement out;
    for (const auto& [label, x] : m) out = out + GroupAlgebraElement::ket(label_from_string(label), x);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cl(3,0) rotors, the dihedral group D4 and their 2x2 matrix bridge";

    std::vector<std::string> labels;
    for (D4Label g : kD4Labels) labels.emplace_back(to_string(g));
    m.attr("D4_LABELS") = labels;

    m.def("geometric_product", [](const List8& a, const List8& b) { return geometric_product(cl(a), cl(b)).coefficients(); });
    m.def("reverse", [](const List8& a) { return reverse(cl(a)).coefficients(); });
    m.def("inverse", [](const List8& a) { return inverse(cl(a)).coefficients(); });

    m.def("exp_half", [](const List3& theta) { return exp_half(vec(theta)).cliffor().coefficients(); },
          "Rotor exp(i theta/2) for the rotation vector theta", py::arg("theta"));
    m.def("rotate", [](const List3& theta, const List3& v) { return rotate_vector(exp_half(vec(theta)), vec(v)).components(); },
          "Rotate v by |theta| about theta (right-hand rule)", py::arg("theta"), py::arg("v"));
    m.def(
        "compose",
        [](const List3& theta1, const List3& theta2) {
            const AxisAngle t = compose_axis_angle(AxisAngle::from_vector(vec(theta1)), AxisAngle::from_vector(vec(theta2)));
            return py::make_tuple(t.axis.components(), t.angle);
        },
        "Axis and angle of theta1 followed by theta2", py::arg("theta1"), py::arg("theta2"));

    m.def("d4_multiply", [](const std::string& g, const std::string& h) {
        return std::string{to_string(multiply(label_from_string(g), label_from_string(h)))};
    });
    m.def("multiplication_table", [] {
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : multiplication_table()) {
            auto& r = rows.emplace_back();
            for (D4Label g : row) r.emplace_back(to_string(g));
        }
        return rows;
    });
    m.def("d4_matrix", [](const std::string& g) { return d4_matrix_of(label_from_string(g)).entries(); },
          "Right-acting 2x2 matrix of a D4 element on the xy-plane");

    m.def("fermion_dyadic", [](int mu, int nu) { return terms(fermion_dyadic(mu, nu)); });
    m.def("ga_apply", [](const std::map<std::string, double>& a, const List3& v) {
        return ga_apply(element_from(a), vec(v)).components();
    });

    m.def("pauli_rep", [](const List8& a) { return pauli_rep(cl(a)).entries(); });
    m.def("cliffor_from_matrix", [](const ComplexRows& rows) { return cliffor_from_matrix(Matrix2{rows}).coefficients(); });
    m.def("decompose", [](const ComplexRows& rows) {
        const Matrix2 mat{rows};
        py::dict out;
        out["fermion"] = decompose_fermion(mat);
        out["cliffor"] = cliffor_from_matrix(mat).coefficients();
        return out;
    });

    m.def(
        "eval_chain",
        [](const std::string& operand, const std::string& steps) {
            return eval_chain(KetChainExpr{parse_operand(operand), parse_chain_steps(steps)}).coefficients();
        },
        "Evaluate r A1|K1> A2|K2> ... left to right", py::arg("operand"), py::arg("steps"));

    m.def(
        "verify",
        [](double tol) {
            py::list out;
            for (const auto& c : run_identity_suite(tol)) {
                py::dict d;
                d["name"] = c.name;
                d["passed"] = c.passed;
                d["max_error"] = c.max_error;
                d["tolerance"] = c.tolerance;
                out.append(d);
            }
            return out;
        },
        py::arg("tol") = kDefaultTolerance);
}
