#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

namespace aqc {

/// Largest register handled by brute-force scans and the Krylov solver.
inline constexpr int kMaxQubits = 24;

/// Relative tolerance under which two classical energies count as degenerate.
inline constexpr double kDegeneracyTolerance = 1e-9;

/// |a - b| <= kDegeneracyTolerance * max(1, |a|).
bool energies_degenerate(double a, double b) noexcept;

/// One classical state of the register. Bit i set means spin s_i = +1,
/// bit i clear means s_i = -1, i.e. s_i = 2 * bit_i - 1 everywhere in the
/// library. The integer value doubles as the computational-basis index.
struct SpinConfiguration {
  std::uint32_t bits = 0;
  int n_qubits = 1;

  SpinConfiguration() = default;
  SpinConfiguration(std::uint32_t bits, int n_qubits);

  int spin(int i) const noexcept { return ((bits >> i) & 1u) ? 1 : -1; }
  SpinConfiguration flipped(int k) const;

  friend bool operator==(const SpinConfiguration&,
                         const SpinConfiguration&) = default;
  friend auto operator<=>(const SpinConfiguration&,
                          const SpinConfiguration&) = default;
};

inline int spin_of(std::uint32_t bits, int i) noexcept {
  return ((bits >> i) & 1u) ? 1 : -1;
}

struct Coupling {
  int i = 0;
  int j = 0;
  double value = 0.0;
};

/// H_P = sum_i h_i s_i + sum_(i<j) J_ij s_i s_j with transverse amplitude
/// delta. Validated on construction and immutable afterwards.
class IsingProblem {
 public:
  struct Neighbor {
    int index;
    double coupling;
  };

  IsingProblem(int n_qubits, std::vector<double> h,
               std::vector<Coupling> couplings, double delta);

  int n_qubits() const noexcept { return n_; }
  std::uint64_t dimension() const noexcept { return std::uint64_t{1} << n_; }
  double delta() const noexcept { return delta_; }
  std::span<const double> h() const noexcept { return h_; }
  /// Couplings with i < j, in insertion order.
  std::span<const Coupling> couplings() const noexcept { return couplings_; }
  std::span<const Neighbor> neighbors(int k) const;

  /// Same fields and couplings, different transverse amplitude.
  IsingProblem with_delta(double delta) const;

  /// Classical energy of a raw basis index; no dimension checks.
  double energy_of(std::uint32_t bits) const noexcept;
  /// Local field h_k + sum_j J_kj s_j felt by spin k.
  double local_field(std::uint32_t bits, int k) const noexcept;
  double flip_delta_of(std::uint32_t bits, int k) const noexcept {
    return -2.0 * spin_of(bits, k) * local_field(bits, k);
  }

 private:
  int n_;
  std::vector<double> h_;
  std::vector<Coupling> couplings_;
  double delta_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

double classical_energy(const IsingProblem& problem,
                        const SpinConfiguration& config);

/// E(flip(config, k)) - E(config), in O(degree of k).
double single_flip_delta(const IsingProblem& problem,
                         const SpinConfiguration& config, int k);

int hamming_distance(const SpinConfiguration& a, const SpinConfiguration& b);

/// Parses the line-oriented instance format:
///   n <N>            first directive
///   delta <float>    transverse amplitude (defaults to 1)
///   h <i> <float>    local field (absent means 0)
///   J <i> <j> <float>
/// '#' starts a comment. Errors carry the offending line number.
IsingProblem parse_instance(std::string_view text);
IsingProblem load_instance(const std::filesystem::path& path);

/// Serializes in the format accepted by parse_instance.
std::string format_instance(const IsingProblem& problem);

}  // namespace aqc
