#pragma once

/**
 * @file worked_examples.hpp
 * @brief The two reference systems with every published intermediate value.
 *
 * System 1 is a 4x4 rank-3 least-squares problem; system 2 is a 4x4 system
 * of index 2 solved through the Drazin inverse. run_worked_examples
 * recomputes each quantity and compares it exactly with the stored value.
 */

#include <functional>
#include <string>
#include <vector>

#include "adjinv/adjinv.hpp"

namespace adjinv::examples {

inline Matrix system1_matrix() {
    return parse_matrix(
        "4 4\n"
        "2 0 -5 4\n"
        "7 -4 -9 1.5\n"
        "3 -4 7 -6.5\n"
        "1 -4 12 -10.5\n");
}

inline Matrix system2_matrix() {
    return parse_matrix(
        "4 4\n"
        "1 -1 1 1\n"
        "0 1 -1 1\n"
        "1 -1 1 2\n"
        "1 -1 1 1\n");
}

/// Right-hand side shared by both systems.
inline Matrix shared_rhs() { return parse_vector("1 2 3 1"); }

struct GoldenCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool passed = false;
};

namespace detail {

inline std::string render(const Matrix& m) {
    if (m.cols() == 1) return format_tuple(m);
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out += "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += to_string(m(i, j));
        }
    }
    return out + "]";
}

inline std::string render(const Scalar& s) { return to_string(s); }
inline std::string render(std::size_t v) { return std::to_string(v); }

class Recorder {
public:
    template <typename T>
    void expect(std::string name, const T& expected, const T& actual) {
        checks_.push_back({std::move(name), render(expected), render(actual), expected == actual});
    }

    std::vector<GoldenCheck> take() { return std::move(checks_); }

private:
    std::vector<GoldenCheck> checks_;
};

}  // namespace detail

/// Recompute every published value of both systems and diff against the stored one.
inline std::vector<GoldenCheck> run_worked_examples(unsigned threads = 1) {
    const ComputeOptions opts{threads};
    detail::Recorder rec;

    // System 1.
    const Matrix a = system1_matrix();
    const Matrix y = shared_rhs();
    rec.expect("system1 rank A", std::size_t{3}, rank(a));
    rec.expect("system1 A*", parse_matrix("4 4\n2 7 3 1\n0 -4 -4 -4\n-5 -9 7 12\n4 1.5 -6.5 -10.5"),
               conjugate_transpose(a));
    const Matrix gram = gram_columns(a);
    rec.expect("system1 A*A",
               parse_matrix("4 4\n63 -44 -40 -11.5\n-44 48 -40 62\n-40 -40 299 -205\n-11.5 62 -205 170.75"), gram);
    rec.expect("system1 d_3(A*A)", Scalar(102060), principal_minor_sum(gram, 3, opts));
    const PinvResult p = mp_inverse(a, {PinvChoice::eq1, threads});
    rec.expect("system1 l_11", Scalar(25779), p.numerators(0, 0));
    const Matrix ledger = parse_matrix(
        "4 4\n"
        "25779 -4905 20742 -5037\n"
        "-3840 -2880 -4800 -960\n"
        "28350 -17010 22680 -5670\n"
        "39558 -18810 26484 -13074\n");
    rec.expect("system1 102060 * A+", ledger, p.numerators);
    rec.expect("system1 A+", ledger * Scalar::ratio(1, 102060), p.pseudo_inverse);
    const Matrix x0 = parse_vector("73158/102060 -24960/102060 56700/102060 68316/102060");
    rec.expect("system1 x0 = A+ y", x0, p.pseudo_inverse * y);
    const SolveReport lsq = lsq_solve(a, y, opts);
    rec.expect("system1 f = A*y", parse_vector("26 -24 10 -23"), lsq.transformed_rhs);
    rec.expect("system1 x0 by Cramer rule", x0, lsq.solution);
    rec.expect("system1 Cramer numerators", parse_vector("73158 -24960 56700 68316"),
               Matrix::column(lsq.numerators));

    // System 2.
    const Matrix b = system2_matrix();
    const Matrix b2 = power(b, 2);
    const Matrix b3 = power(b, 3);
    rec.expect("system2 A^2", parse_matrix("4 4\n3 -4 4 3\n0 1 -1 0\n4 -5 5 4\n3 -4 4 3"), b2);
    rec.expect("system2 A^3", parse_matrix("4 4\n10 -14 14 10\n-1 2 -2 -1\n13 -18 18 13\n10 -14 14 10"), b3);
    rec.expect("system2 rank A", std::size_t{3}, rank(b));
    rec.expect("system2 rank A^2", std::size_t{2}, rank(b2));
    rec.expect("system2 rank A^3", std::size_t{2}, rank(b3));
    rec.expect("system2 Ind A", std::size_t{2}, index_of(b));
    rec.expect("system2 d_2(A^3)", Scalar(8), principal_minor_sum(b3, 2, opts));
    const DrazinResult d = drazin_inverse(b, opts);
    rec.expect("system2 d_11", Scalar(4), d.numerators(0, 0));
    const Matrix ad = parse_matrix(
        "4 4\n"
        "0.5 0.5 -0.5 0.5\n"
        "1.75 2.5 -2.5 1.75\n"
        "1.25 1.5 -1.5 1.25\n"
        "0.5 0.5 -0.5 0.5\n");
    rec.expect("system2 A^D", ad, d.drazin_inverse);
    const Matrix xhat = parse_vector("1/2 1 1 1/2");
    rec.expect("system2 x = A^D y", xhat, d.drazin_inverse * y);
    const SolveReport ds = drazin_solve(b, y, opts);
    rec.expect("system2 g = A^2 y", parse_vector("10 -1 13 10"), ds.transformed_rhs);
    rec.expect("system2 x by Cramer rule", xhat, ds.solution);
    rec.expect("system2 Cramer numerators", parse_vector("4 8 8 4"), Matrix::column(ds.numerators));

    return rec.take();
}

}  // namespace adjinv::examples
