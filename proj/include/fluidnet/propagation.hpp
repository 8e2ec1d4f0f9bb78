#pragma once

namespace fluidnet {

struct PropagationModel {
  double path_gain_constant = 1.0;  // K
  double path_loss_exponent = 3.0;  // eta
  double tx_power = 1.0;            // P, per subcarrier
  double thermal_noise = 0.0;       // N_th, per subcarrier

  /// Throws kDomainError unless eta > 2, K > 0, P > 0 and N_th >= 0.
  void validate() const;
};

/// K * distance^-eta. Throws kNonPositiveDistance for distance <= 0.
double path_gain(const PropagationModel& model, double distance);

}  // namespace fluidnet
