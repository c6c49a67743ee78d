#pragma once

#include <cstddef>
#include <vector>

namespace bellbound {

/// Measurement scenario: N parties, party i choosing among M_i inputs and
/// producing one of P real outputs or a no-detection event.
///
/// Conventions used across the whole library:
///   - parties are numbered 1..N in public interfaces,
///   - inputs are 1-based (x_i in 1..M_i),
///   - real outputs are 0..P-1 and the no-detection symbol is encoded as
///     the integer P, one past the last real output.
struct Scenario {
  int num_parties = 1;
  std::vector<int> inputs_per_party;
  int num_outputs = 1;

  Scenario() = default;
  Scenario(int parties, std::vector<int> inputs, int outputs);

  int no_detection() const { return num_outputs; }
  int alphabet_size() const { return num_outputs + 1; }

  std::size_t input_blocks() const;       // prod_i M_i
  std::size_t outcomes_per_block() const; // (P+1)^N
  std::size_t table_size() const;

  /// Dense index order: party-1 input slowest, then party-2 input, ...,
  /// then party-1 outcome, ..., party-N outcome fastest.
  std::size_t block_index(const std::vector<int>& inputs) const;
  std::size_t outcome_index(const std::vector<int>& outputs) const;
  std::size_t table_index(const std::vector<int>& inputs, const std::vector<int>& outputs) const;

  std::vector<int> block_inputs(std::size_t block) const;
  std::vector<int> outcome_outputs(std::size_t outcome) const;

  bool operator==(const Scenario&) const = default;
};

/// Odometer step over joint inputs (1-based, last party fastest).
/// Returns false once the vector has wrapped back to all ones.
bool next_joint_input(const Scenario& s, std::vector<int>& inputs);

/// Odometer step over joint outputs in 0..limit-1 per party (last party
/// fastest). Returns false on wrap-around to all zeros.
bool next_joint_output(std::vector<int>& outputs, int limit);

}  // namespace bellbound
