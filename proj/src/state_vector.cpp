#include "fibcode/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace fibcode {

namespace {

std::string format17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void check_qubit_index(const StateVector& s, int q, const char* what) {
    if (q < 0 || q >= s.num_qubits)
        throw std::invalid_argument(std::string(what) + " index out of range");
}

}  // namespace

double Unitary2::unitarity_defect() const {
    // u^dagger u entries.
    cplx g00 = std::conj(m00) * m00 + std::conj(m10) * m10;
    cplx g01 = std::conj(m00) * m01 + std::conj(m10) * m11;
    cplx g10 = std::conj(m01) * m00 + std::conj(m11) * m10;
    cplx g11 = std::conj(m01) * m01 + std::conj(m11) * m11;
    double d = std::abs(g00 - 1.0);
    d = std::max(d, std::abs(g01));
    d = std::max(d, std::abs(g10));
    d = std::max(d, std::abs(g11 - 1.0));
    return d;
}

Unitary2 Unitary2::pauli_x() { return {0, 1, 1, 0}; }

Unitary2 Unitary2::rotation_y(double alpha) {
    double c = std::cos(alpha / 2), s = std::sin(alpha / 2);
    return {c, s, -s, c};
}

StateVector basis_state(int num_qubits, std::string_view bits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits)
        throw std::invalid_argument("qubit count outside 1..16");
    if (static_cast<int>(bits.size()) != num_qubits)
        throw std::invalid_argument("bit-string length does not match qubit count");
    std::uint64_t index = 0;
    for (int k = 0; k < num_qubits; ++k) {
        if (bits[k] == '1') index |= std::uint64_t(1) << k;
        else if (bits[k] != '0') throw std::invalid_argument("bit-string character outside {0,1}");
    }
    return basis_state(num_qubits, index);
}

StateVector basis_state(int num_qubits, std::uint64_t index) {
    if (num_qubits < 1 || num_qubits > kMaxQubits)
        throw std::invalid_argument("qubit count outside 1..16");
    StateVector s;
    s.num_qubits = num_qubits;
    s.amps.assign(std::size_t(1) << num_qubits, cplx(0, 0));
    if (index >= s.amps.size()) throw std::invalid_argument("basis index out of range");
    s.amps[index] = 1.0;
    return s;
}

std::string index_to_bits(std::uint64_t index, int num_qubits) {
    std::string bits(num_qubits, '0');
    for (int k = 0; k < num_qubits; ++k)
        if (index >> k & 1) bits[k] = '1';
    return bits;
}

double norm(const StateVector& s) {
    double n2 = 0;
    for (const cplx& a : s.amps) n2 += std::norm(a);
    return std::sqrt(n2);
}

void apply_controlled_unitary(StateVector& s, const std::vector<int>& controls,
                              int target, const Unitary2& u, double unitary_tol) {
    check_qubit_index(s, target, "target");
    std::uint64_t cmask = 0;
    for (int c : controls) {
        check_qubit_index(s, c, "control");
        if (c == target) throw std::invalid_argument("control collides with target");
        std::uint64_t bit = std::uint64_t(1) << c;
        if (cmask & bit) throw std::invalid_argument("duplicate control index");
        cmask |= bit;
    }
    if (u.unitarity_defect() > unitary_tol)
        throw std::invalid_argument("gate matrix is not unitary within tolerance");

    const std::uint64_t tmask = std::uint64_t(1) << target;
    const std::uint64_t n = s.amps.size();
    for (std::uint64_t i = 0; i < n; ++i) {
        if ((i & tmask) || (i & cmask) != cmask) continue;
        cplx a0 = s.amps[i], a1 = s.amps[i | tmask];
        s.amps[i] = u.m00 * a0 + u.m01 * a1;
        s.amps[i | tmask] = u.m10 * a0 + u.m11 * a1;
    }
}

void apply_anticontrolled_x(StateVector& s, int anti_control, int target) {
    check_qubit_index(s, anti_control, "control");
    check_qubit_index(s, target, "target");
    if (anti_control == target) throw std::invalid_argument("control collides with target");
    const std::uint64_t amask = std::uint64_t(1) << anti_control;
    const std::uint64_t tmask = std::uint64_t(1) << target;
    const std::uint64_t n = s.amps.size();
    for (std::uint64_t i = 0; i < n; ++i) {
        if ((i & tmask) || (i & amask)) continue;
        std::swap(s.amps[i], s.amps[i | tmask]);
    }
}

MeasurementOutcome measure_qubit(const StateVector& s, int q) {
    check_qubit_index(s, q, "measured qubit");
    const std::uint64_t qmask = std::uint64_t(1) << q;
    double p0 = 0, p1 = 0;
    for (std::uint64_t i = 0; i < s.amps.size(); ++i)
        ((i & qmask) ? p1 : p0) += std::norm(s.amps[i]);

    MeasurementOutcome out;
    out.prob0 = p0;
    auto project = [&](bool bit, double p) -> std::optional<StateVector> {
        if (p < kAmplitudeEpsilon) return std::nullopt;
        StateVector proj = s;
        double scale = 1.0 / std::sqrt(p);
        for (std::uint64_t i = 0; i < proj.amps.size(); ++i) {
            if (((i & qmask) != 0) == bit) proj.amps[i] *= scale;
            else proj.amps[i] = 0;
        }
        return proj;
    };
    out.projected0 = project(false, p0);
    out.projected1 = project(true, p1);
    return out;
}

double global_phase_deviation(const StateVector& s1, const StateVector& s2) {
    if (s1.num_qubits != s2.num_qubits)
        throw std::invalid_argument("qubit counts differ");
    std::size_t j = 0;
    double best = -1;
    for (std::size_t i = 0; i < s2.amps.size(); ++i) {
        double mag = std::norm(s2.amps[i]);
        if (mag > best) { best = mag; j = i; }
    }
    if (best <= 0) {
        // s2 is the zero vector; the deviation is just the size of s1.
        double d = 0;
        for (const cplx& a : s1.amps) d = std::max(d, std::abs(a));
        return d;
    }
    cplx lambda = s1.amps[j] / s2.amps[j];
    // Compare against a pure phase even when the leading amplitudes disagree
    // in magnitude, so magnitude errors at component j are not absorbed.
    double mag = std::abs(lambda);
    if (mag > 0) lambda /= mag;
    double d = 0;
    for (std::size_t i = 0; i < s1.amps.size(); ++i)
        d = std::max(d, std::abs(s1.amps[i] - lambda * s2.amps[i]));
    return d;
}

bool equal_up_to_global_phase(const StateVector& s1, const StateVector& s2,
                              double tol) {
    return global_phase_deviation(s1, s2) <= tol;
}

std::string dump_state(const StateVector& s) {
    std::string out;
    for (std::uint64_t i = 0; i < s.amps.size(); ++i) {
        if (std::norm(s.amps[i]) < kAmplitudeEpsilon) continue;
        out += index_to_bits(i, s.num_qubits);
        out += ' ';
        out += format17(s.amps[i].real());
        out += ' ';
        out += format17(s.amps[i].imag());
        out += '\n';
    }
    return out;
}

StateVector parse_state_dump(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    StateVector s;
    int line_no = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("state dump line " + std::to_string(line_no) +
                                    ": " + msg);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = line.substr(0, line.find('#'));
        std::istringstream ls(stripped);
        std::string bits;
        if (!(ls >> bits)) continue;  // blank or comment-only line
        double re, im;
        if (!(ls >> re >> im)) fail("expected `<bitstring> <re> <im>`");
        std::string extra;
        if (ls >> extra) fail("trailing tokens");
        if (s.num_qubits == 0) {
            s.num_qubits = static_cast<int>(bits.size());
            if (s.num_qubits < 1 || s.num_qubits > kMaxQubits)
                fail("qubit count outside 1..16");
            s.amps.assign(std::size_t(1) << s.num_qubits, cplx(0, 0));
        }
        if (static_cast<int>(bits.size()) != s.num_qubits)
            fail("inconsistent bit-string length");
        std::uint64_t index = 0;
        for (int k = 0; k < s.num_qubits; ++k) {
            if (bits[k] == '1') index |= std::uint64_t(1) << k;
            else if (bits[k] != '0') fail("bit-string character outside {0,1}");
        }
        s.amps[index] = cplx(re, im);
    }
    if (s.num_qubits == 0)
        throw std::invalid_argument("state dump contains no amplitudes");
    return s;
}

}  // namespace fibcode
