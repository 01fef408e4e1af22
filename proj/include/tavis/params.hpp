#pragma once

namespace tavis {

/// Physical parameters of two identical emitters in one lossy mode.
/// The emitter transition frequency is omega0 - delta.
struct SystemParams {
  double omega0 = 0.0;
  double delta = 0.0;
  double g = 1.0;
  double gamma_a = 0.0;
  double gamma_sigma = 0.0;

  double gamma_plus() const { return (gamma_a + gamma_sigma) / 4.0; }
  double gamma_minus() const { return (gamma_a - gamma_sigma) / 4.0; }

  /// Throws InvalidArgument unless g > 0, rates >= 0 and all values finite.
  void validate() const;
};

}  // namespace tavis
