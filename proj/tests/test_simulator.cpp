#include <doctest.h>

#include <random>

#include "nucresp/simulator.hpp"
#include "test_util.hpp"

using namespace nucresp;

TEST_SUITE_BEGIN("simulator");

namespace {
Circuit random_circuit(std::size_t n, std::size_t depth, std::mt19937_64& rng,
                       bool rotations_only = false) {
  Circuit c(n);
  std::uniform_int_distribution<int> kind(0, rotations_only ? 3 : 5);
  std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (std::size_t d = 0; d < depth; ++d) {
    const int k = kind(rng);
    const std::size_t q = qubit(rng);
    switch (k) {
      case 0: c.append(Gate::rx(q, angle(rng))); break;
      case 1: c.append(Gate::ry(q, angle(rng))); break;
      case 2: c.append(Gate::rz(q, angle(rng))); break;
      case 3: {
        std::size_t p = qubit(rng);
        if (p == q) p = (p + 1) % n;
        c.append(Gate::cnot(q, p));
        break;
      }
      case 4: c.append(Gate::h(q)); break;
      default: {
        std::size_t p = qubit(rng);
        if (p == q) p = (p + 1) % n;
        c.append(Gate::cz(q, p));
        break;
      }
    }
  }
  return c;
}
}  // namespace

TEST_CASE("empty circuit returns the input state") {
  const StateVector in = StateVector::basis(3, 5);
  const StateVector out = run_pure(Circuit(3), in);
  CHECK((out.amplitudes - in.amplitudes).norm() == 0.0);
}

TEST_CASE("H on the zero state gives the plus state") {
  Circuit c(1);
  c.append(Gate::h(0));
  const StateVector out = run_pure(c);
  CHECK(out.amplitudes[0].real() == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(out.amplitudes[1].real() == doctest::Approx(1 / std::sqrt(2.0)));
}

TEST_CASE("norm is preserved across random circuits") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 2 + trial % 4;  // up to 5 qubits
    const Circuit c = random_circuit(n, 12, rng);
    const StateVector out = run_pure(c);
    CHECK(std::abs(out.norm() - 1.0) < 1e-10);
  }
}

TEST_CASE("gate semantics against dense kron forms") {
  std::mt19937_64 rng(42);
  // CNOT with control 1, target 0 on 2 qubits
  Circuit c(2);
  c.append(Gate::cnot(1, 0));
  Eigen::Matrix4cd cnot10 = Eigen::Matrix4cd::Zero();
  cnot10(0, 0) = 1;
  cnot10(3, 1) = 1;
  cnot10(2, 2) = 1;
  cnot10(1, 3) = 1;
  CHECK((circuit_unitary(c) - cnot10).cwiseAbs().maxCoeff() < 1e-14);
  // SWAP
  Circuit s(2);
  s.append(Gate::swap(0, 1));
  Eigen::Matrix4cd swap = Eigen::Matrix4cd::Zero();
  swap(0, 0) = 1;
  swap(2, 1) = 1;
  swap(1, 2) = 1;
  swap(3, 3) = 1;
  CHECK((circuit_unitary(s) - swap).cwiseAbs().maxCoeff() < 1e-14);
  // rotations against exponentials of the dense generators
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    const double a = angle(rng);
    Circuit r(2);
    r.append(Gate::ry(1, a));
    CHECK(oracle::phase_dist(circuit_unitary(r),
                             oracle::expm_i(oracle::dense_pauli("IY"), a / 2)) <
          1e-12);
  }
}

TEST_CASE("noiseless density-matrix run matches the pure outer product") {
  std::mt19937_64 rng(43);
  const Circuit c = random_circuit(3, 15, rng);
  NoiseModel noise;
  noise.p2 = 0.0;
  const DensityMatrix rho = run_noisy(c, noise);
  const StateVector psi = run_pure(c);
  CHECK((rho.rho - psi.amplitudes * psi.amplitudes.adjoint())
            .cwiseAbs()
            .maxCoeff() < 1e-10);
}

TEST_CASE("p2 = 1 after one CNOT fully mixes the pair") {
  Circuit c(2);
  c.append(Gate::h(0));
  c.append(Gate::cnot(0, 1));
  NoiseModel noise;
  noise.p2 = 1.0;
  const DensityMatrix rho = run_noisy(c, noise);
  CHECK((rho.rho - Eigen::MatrixXcd::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() <
        1e-10);
}

TEST_CASE("noisy evolution is CPTP for random strengths") {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> strength(0.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    const Circuit c = random_circuit(3, 20, rng);
    NoiseModel noise;
    noise.p2 = strength(rng);
    const DensityMatrix rho = run_noisy(c, noise);
    rho.validate();  // hermitian, unit trace, PSD
  }
}

TEST_CASE("folding leaves the noiseless unitary unchanged and scales gates") {
  std::mt19937_64 rng(45);
  const Circuit c = random_circuit(4, 18, rng);
  NoiseModel clean;
  clean.p2 = 0.0;
  clean.amplification = 3;
  const DensityMatrix folded = run_noisy(c, clean);
  const StateVector psi = run_pure(c);
  CHECK((folded.rho - psi.amplitudes * psi.amplitudes.adjoint())
            .cwiseAbs()
            .maxCoeff() < 1e-9);
  // with noise on, higher k means stronger damping toward the uniform state
  NoiseModel noisy;
  noisy.p2 = 0.05;
  double previous = 1.0;
  for (int k : {1, 3, 5, 7}) {
    noisy.amplification = k;
    const DensityMatrix rho = run_noisy(c, noisy);
    const double purity = (rho.rho * rho.rho).trace().real();
    CHECK(purity < previous + 1e-12);
    previous = purity;
  }
}

TEST_CASE("deep noisy circuits approach the fully depolarized state") {
  std::mt19937_64 rng(46);
  NoiseModel noise;
  noise.p2 = 0.2;
  const std::size_t n = 3;
  const auto trace_distance = [&](const DensityMatrix& r) {
    Eigen::MatrixXcd diff = r.rho - Eigen::MatrixXcd::Identity(8, 8) / 8.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(diff,
                                                       Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
  };
  Circuit accumulated(n);
  double previous = trace_distance(run_noisy(accumulated, noise));
  for (int block = 0; block < 5; ++block) {
    accumulated.append(random_circuit(n, 12, rng));
    const double now = trace_distance(run_noisy(accumulated, noise));
    CHECK(now < previous + 1e-9);
    previous = now;
  }
}

TEST_CASE("sampling: deterministic states, uniform states, scrambled readout") {
  std::mt19937_64 rng(47);
  const StateVector zero = StateVector::zero(4);
  const MeasuredDistribution d0 = sample(zero, 1000, rng);
  CHECK(d0.counts[0] == 1000);
  // uniform superposition: all bins within 5 sigma of shots/16
  Circuit c(4);
  for (std::size_t q = 0; q < 4; ++q) c.append(Gate::h(q));
  const StateVector plus = run_pure(c);
  const MeasuredDistribution du = sample(plus, 8192, rng);
  const double mean = 8192.0 / 16.0;
  const double sigma = std::sqrt(8192.0 * (1.0 / 16) * (15.0 / 16));
  for (auto count : du.counts)
    CHECK(std::abs(static_cast<double>(count) - mean) < 5.0 * sigma);
  // fully scrambled readout turns any state uniform
  std::vector<ConfusionMatrix> scrambled(4, ConfusionMatrix{0.499999, 0.499999});
  const MeasuredDistribution ds = sample(zero, 200000, rng, &scrambled);
  for (auto count : ds.counts)
    CHECK(std::abs(static_cast<double>(count) - 200000.0 / 16) <
          5.0 * std::sqrt(200000.0 * (1.0 / 16) * (15.0 / 16)));
}

TEST_CASE("sampling is reproducible for a fixed seed") {
  Circuit c(3);
  c.append(Gate::h(0));
  c.append(Gate::cnot(0, 1));
  c.append(Gate::ry(2, 0.7));
  const StateVector psi = run_pure(c);
  std::mt19937_64 r1(123), r2(123);
  const MeasuredDistribution a = sample(psi, 4096, r1);
  const MeasuredDistribution b = sample(psi, 4096, r2);
  CHECK(a.counts == b.counts);
}

TEST_CASE("expectation values") {
  const StateVector zero = StateVector::zero(1);
  PauliSum z(1);
  z.add(1.0, PauliString::from_label("Z"));
  CHECK(expectation(zero, z) == doctest::Approx(1.0));
  Circuit c(1);
  c.append(Gate::h(0));
  const StateVector plus = run_pure(c);
  CHECK(expectation(plus, z) == doctest::Approx(0.0).epsilon(1e-12));
  // PauliSum path agrees with the dense path on random states
  std::mt19937_64 rng(48);
  PauliSum obs(3);
  obs.add(0.7, PauliString::from_label("XZY"));
  obs.add(-1.2, PauliString::from_label("IZZ"));
  obs.add(0.3, PauliString::from_label("YIX"));
  const Eigen::MatrixXcd dense = obs.to_matrix();
  for (int trial = 0; trial < 20; ++trial) {
    const StateVector psi = run_pure(random_circuit(3, 15, rng));
    CHECK(expectation(psi, obs) ==
          doctest::Approx(expectation(psi, dense)).epsilon(1e-9));
  }
}

TEST_SUITE_END();
