#pragma once

// Dense state-vector engine for up to 16 qubits with controlled-unitary
// application and projective single-qubit measurement. Little-endian basis
// indexing throughout: qubit 0 is the least significant bit, and character k
// of a bit-string refers to qubit k.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fibcode {

using cplx = std::complex<double>;

inline constexpr int kMaxQubits = 16;

// Probability below which a measurement branch is declared absent, and below
// which an amplitude is omitted from text dumps.
inline constexpr double kAmplitudeEpsilon = 1e-12;

// 2x2 complex matrix, row-major.
struct Unitary2 {
    cplx m00, m01, m10, m11;

    // Max-entry deviation of (this^dagger * this) from the identity.
    double unitarity_defect() const;

    static Unitary2 pauli_x();
    // exp(i*alpha*sigma_y/2) = [[cos(a/2), sin(a/2)], [-sin(a/2), cos(a/2)]]
    static Unitary2 rotation_y(double alpha);
};

struct StateVector {
    int num_qubits = 0;
    std::vector<cplx> amps;

    std::size_t dim() const { return amps.size(); }
};

// |bits>, with bits[k] the value of qubit k. Throws std::invalid_argument on
// a length mismatch, a character outside {0,1}, or num_qubits outside 1..16.
StateVector basis_state(int num_qubits, std::string_view bits);

// |index> in little-endian encoding.
StateVector basis_state(int num_qubits, std::uint64_t index);

std::string index_to_bits(std::uint64_t index, int num_qubits);

double norm(const StateVector& s);

// Applies u to `target` on every basis state whose control bits are all 1.
// An empty control set means an unconditional single-qubit gate. Throws
// std::invalid_argument on an index collision, an out-of-range index, or a
// unitarity defect exceeding unitary_tol.
void apply_controlled_unitary(StateVector& s, const std::vector<int>& controls,
                              int target, const Unitary2& u,
                              double unitary_tol = 1e-10);

// X on `target` on every basis state whose anti-control bit is 0.
void apply_anticontrolled_x(StateVector& s, int anti_control, int target);

struct MeasurementOutcome {
    double prob0 = 0;
    // Renormalized projections; a branch is absent iff its probability is
    // below kAmplitudeEpsilon.
    std::optional<StateVector> projected0;
    std::optional<StateVector> projected1;
};

MeasurementOutcome measure_qubit(const StateVector& s, int q);

// Max-amplitude deviation |s1 - lambda*s2| for the phase lambda = s1_j/s2_j
// read off at the largest-magnitude component j of s2.
double global_phase_deviation(const StateVector& s1, const StateVector& s2);

bool equal_up_to_global_phase(const StateVector& s1, const StateVector& s2,
                              double tol);

// One line per amplitude above kAmplitudeEpsilon: `<bitstring> <re> <im>`
// with 17 significant digits.
std::string dump_state(const StateVector& s);

// Inverse of dump_state; qubit count inferred from the bit-string length,
// unlisted amplitudes are zero. Blank lines and `#` comments are skipped.
// Throws std::invalid_argument naming the offending line on malformed input.
StateVector parse_state_dump(const std::string& text);

}  // namespace fibcode
