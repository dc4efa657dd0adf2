#ifndef SWINGUP_PENDULUM_ENV_HPP_
#define SWINGUP_PENDULUM_ENV_HPP_

#include <filesystem>
#include <vector>

#include "swingup/rng.hpp"

namespace swingup {

inline constexpr double kMaxTorque = 2.0;   // N*m
inline constexpr double kMaxSpeed = 8.0;    // rad/s
inline constexpr double kActionBound = kMaxTorque;

struct EnvParams {
  double gravity = 10.0;   // m/s^2
  double mass = 1.0;       // kg
  double length = 1.0;     // m
  double dt = 0.05;        // s
  int episode_length = 200;

  void validate() const;  // throws std::invalid_argument
};

/// Internal dynamics state. theta is unbounded during integration; the wrap
/// to [-pi, pi) happens only inside the reward.
struct PendulumState {
  double theta = 0.0;      // rad, theta = 0 is the unstable upright equilibrium
  double theta_dot = 0.0;  // rad/s, in [-kMaxSpeed, kMaxSpeed] after every step
  int step_index = 0;
};

/// What the agent sees: (cos theta, sin theta, theta_dot).
struct Observation {
  double cos_theta = 1.0;
  double sin_theta = 0.0;
  double theta_dot = 0.0;
};

struct Action {
  double torque = 0.0;  // N*m, clipped to [-kMaxTorque, kMaxTorque] on use
};

struct StepResult {
  Observation observation;
  double reward = 0.0;
  bool truncated = false;
};

/// Maps theta to the equivalent angle in [-pi, pi).
double normalize_angle(double theta);

/// r = -(normalize_angle(theta)^2 + 0.1 theta_dot^2 + 0.001 torque^2).
/// Always <= 0; zero only upright, at rest, with zero torque.
double pendulum_reward(double theta, double theta_dot, double torque);

/// Pendulum swing-up with a fixed-step semi-implicit Euler integrator.
/// Episodes truncate at episode_length steps; there is no other termination.
class PendulumEnv {
 public:
  explicit PendulumEnv(EnvParams params = {});

  /// theta ~ U(-pi, pi), theta_dot ~ U(-1, 1), step_index = 0.
  Observation reset(Rng& rng);

  /// Deterministic reset to an exact state.
  Observation reset_to(double theta, double theta_dot);

  /// Advances one step. Throws std::logic_error if the episode is finished.
  StepResult step(Action action);

  Observation observation() const;
  const PendulumState& state() const { return state_; }
  void set_state(const PendulumState& state) { state_ = state; }
  const EnvParams& params() const { return params_; }
  bool done() const { return state_.step_index >= params_.episode_length; }

 private:
  EnvParams params_;
  PendulumState state_;
};

/// One trajectory record per step: the pre-step state, the clipped torque
/// applied at that step, and the reward it earned.
struct TrajectoryRow {
  int step = 0;
  double theta = 0.0;
  double theta_dot = 0.0;
  double torque = 0.0;
  double reward = 0.0;
};

/// Comma-separated text, header row `step,theta,theta_dot,torque,reward`,
/// reals at 17 significant digits.
void write_trajectory(const std::filesystem::path& path, const std::vector<TrajectoryRow>& rows);
std::vector<TrajectoryRow> read_trajectory(const std::filesystem::path& path);

}  // namespace swingup

#endif  // SWINGUP_PENDULUM_ENV_HPP_
