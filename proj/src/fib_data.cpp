#include "fibcode/fib_data.hpp"

#include <cmath>
#include <stdexcept>

namespace fibcode {

Mat2 Mat2::mul(const Mat2& o) const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r(i, j) = m[i][0] * o(0, j) + m[i][1] * o(1, j);
    return r;
}

Mat2 Mat2::transpose() const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = m[j][i];
    return r;
}

double Mat2::det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

double Mat2::max_abs_diff(const Mat2& o) const {
    double d = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(m[i][j] - o(i, j)));
    return d;
}

Mat2 Mat2::identity() { return Mat2{{{{1, 0}, {0, 1}}}}; }

Mat2 Mat2::pauli_x() { return Mat2{{{{0, 1}, {1, 0}}}}; }

Mat2 Mat2::rotation_y(double alpha) {
    double c = std::cos(alpha / 2), s = std::sin(alpha / 2);
    return Mat2{{{{c, s}, {-s, c}}}};
}

std::string to_string(MatName name) {
    switch (name) {
        case MatName::F: return "F";
        case MatName::S: return "S";
        case MatName::U: return "U";
        case MatName::XUX: return "XUX";
    }
    return "?";
}

bool parse_mat_name(const std::string& word, MatName& out) {
    if (word == "F") out = MatName::F;
    else if (word == "S") out = MatName::S;
    else if (word == "U") out = MatName::U;
    else if (word == "XUX") out = MatName::XUX;
    else return false;
    return true;
}

double golden_ratio() { return (std::sqrt(5.0) + 1.0) / 2.0; }

FibonacciTensorSet FibonacciTensorSet::standard() {
    FibonacciTensorSet ts;
    double phi = golden_ratio();
    ts.phi_ = phi;
    ts.theta_ = std::atan(1.0 / std::sqrt(phi));
    ts.rho_ = std::atan(1.0 / phi);

    double fd = 1.0 / phi, fo = 1.0 / std::sqrt(phi);
    ts.f_ = Mat2{{{{fd, fo}, {fo, -fd}}}};

    double sn = 1.0 / std::sqrt(1.0 + phi * phi);
    ts.s_ = Mat2{{{{sn, phi * sn}, {phi * sn, -sn}}}};

    double ud = 1.0 / (phi * phi), uo = std::sqrt(1.0 - 1.0 / (phi * phi * phi * phi));
    ts.u_ = Mat2{{{{-ud, uo}, {uo, ud}}}};
    // X U X swaps both rows and columns.
    ts.xux_ = Mat2{{{{ud, uo}, {uo, -ud}}}};
    return ts;
}

FibonacciTensorSet FibonacciTensorSet::with_f_entry_perturbed(int r, int c,
                                                              double amount) const {
    if (r < 0 || r > 1 || c < 0 || c > 1)
        throw std::out_of_range("f-matrix entry index out of range");
    FibonacciTensorSet ts = *this;
    ts.f_(r, c) += amount;
    return ts;
}

const Mat2& FibonacciTensorSet::matrix(MatName name) const {
    switch (name) {
        case MatName::F: return f_;
        case MatName::S: return s_;
        case MatName::U: return u_;
        case MatName::XUX: return xux_;
    }
    throw std::invalid_argument("unknown matrix name");
}

double FibonacciTensorSet::rotation_angle(MatName name) const {
    switch (name) {
        case MatName::F: return theta_;
        case MatName::S: return rho_;
        // U and XUX also have the form Ry(a) X Ry(-a) = [[sin a, cos a], [cos a, -sin a]].
        case MatName::U: return -std::asin(1.0 / (phi_ * phi_));
        case MatName::XUX: return std::asin(1.0 / (phi_ * phi_));
    }
    throw std::invalid_argument("unknown matrix name");
}

int FibonacciTensorSet::delta(int i, int j, int k) {
    // 1 iff ijk in {000, 011, 101, 110, 111}: forbidden are exactly the
    // configurations with a single 1 among the three labels.
    return (i + j + k == 1) ? 0 : 1;
}

double FibonacciTensorSet::f_tensor(int a, int b, int c, int d, int e, int ep) const {
    // Vertex constraints of the pre-move vertex pair (a,b,e),(c,d,e) and the
    // post-move pair (a,d,e'),(b,c,e'). The unique valid (e,e') pair of each
    // deterministic sector comes out of these constraints directly.
    if (!delta(a, b, e) || !delta(c, d, e)) return 0.0;
    if (!delta(a, d, ep) || !delta(b, c, ep)) return 0.0;
    if (a && b && c && d) return f_(e, ep);
    return 1.0;
}

double FibonacciTensorSet::s_tensor(int a, int b, int bp) const {
    if (a == 0) return s_(b, bp);
    return (b == 1 && bp == 1) ? 1.0 : 0.0;
}

std::uint64_t fibonacci(int n) {
    if (n < 0 || n > 92) throw std::out_of_range("fibonacci argument outside 0..92");
    std::uint64_t a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        std::uint64_t next = a + b;
        a = b;
        b = next;
    }
    return a;
}

TadpoleStates tadpole_states(const FibonacciTensorSet& ts) {
    double phi = ts.phi();
    double norm = std::sqrt(1.0 + phi * phi);
    TadpoleStates st;
    // Index = tail + 2*head. Tail 0, head (|0> + phi|1>)/sqrt(1+phi^2):
    st.bp1[0] = 1.0 / norm;
    st.bp1[2] = phi / norm;
    // Tail 0, head (phi|0> - |1>)/sqrt(1+phi^2):
    st.bp0_a[0] = phi / norm;
    st.bp0_a[2] = -1.0 / norm;
    // Tail 1, head 1:
    st.bp0_b[3] = 1.0;
    return st;
}

}  // namespace fibcode
