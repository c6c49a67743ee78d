#include "bellbound/scenario.hpp"

#include <stdexcept>
#include <string>

namespace bellbound {

Scenario::Scenario(int parties, std::vector<int> inputs, int outputs)
    : num_parties(parties), inputs_per_party(std::move(inputs)), num_outputs(outputs) {
  if (num_parties < 1) throw std::invalid_argument("scenario needs at least one party");
  if (static_cast<int>(inputs_per_party.size()) != num_parties) {
    throw std::invalid_argument("inputs_per_party size does not match the number of parties");
  }
  for (int m : inputs_per_party) {
    if (m < 1) throw std::invalid_argument("every party needs at least one input");
  }
  if (num_outputs < 1) throw std::invalid_argument("scenario needs at least one real output");
}

std::size_t Scenario::input_blocks() const {
  std::size_t n = 1;
  for (int m : inputs_per_party) n *= static_cast<std::size_t>(m);
  return n;
}

std::size_t Scenario::outcomes_per_block() const {
  std::size_t n = 1;
  for (int i = 0; i < num_parties; ++i) n *= static_cast<std::size_t>(alphabet_size());
  return n;
}

std::size_t Scenario::table_size() const { return input_blocks() * outcomes_per_block(); }

std::size_t Scenario::block_index(const std::vector<int>& inputs) const {
  if (static_cast<int>(inputs.size()) != num_parties) {
    throw std::invalid_argument("joint input has wrong arity");
  }
  std::size_t index = 0;
  for (int i = 0; i < num_parties; ++i) {
    const int x = inputs[i];
    if (x < 1 || x > inputs_per_party[i]) {
      throw std::invalid_argument("input " + std::to_string(x) + " out of range for party " +
                                  std::to_string(i + 1));
    }
    index = index * static_cast<std::size_t>(inputs_per_party[i]) + static_cast<std::size_t>(x - 1);
  }
  return index;
}

std::size_t Scenario::outcome_index(const std::vector<int>& outputs) const {
  if (static_cast<int>(outputs.size()) != num_parties) {
    throw std::invalid_argument("joint output has wrong arity");
  }
  std::size_t index = 0;
  for (int i = 0; i < num_parties; ++i) {
    const int a = outputs[i];
    if (a < 0 || a > num_outputs) {
      throw std::invalid_argument("output " + std::to_string(a) + " out of range for party " +
                                  std::to_string(i + 1));
    }
    index = index * static_cast<std::size_t>(alphabet_size()) + static_cast<std::size_t>(a);
  }
  return index;
}

std::size_t Scenario::table_index(const std::vector<int>& inputs,
                                  const std::vector<int>& outputs) const {
  return block_index(inputs) * outcomes_per_block() + outcome_index(outputs);
}

std::vector<int> Scenario::block_inputs(std::size_t block) const {
  std::vector<int> inputs(static_cast<std::size_t>(num_parties));
  for (int i = num_parties - 1; i >= 0; --i) {
    const std::size_t m = static_cast<std::size_t>(inputs_per_party[i]);
    inputs[i] = static_cast<int>(block % m) + 1;
    block /= m;
  }
  return inputs;
}

std::vector<int> Scenario::outcome_outputs(std::size_t outcome) const {
  std::vector<int> outputs(static_cast<std::size_t>(num_parties));
  const std::size_t base = static_cast<std::size_t>(alphabet_size());
  for (int i = num_parties - 1; i >= 0; --i) {
    outputs[i] = static_cast<int>(outcome % base);
    outcome /= base;
  }
  return outputs;
}

bool next_joint_input(const Scenario& s, std::vector<int>& inputs) {
  for (int i = s.num_parties - 1; i >= 0; --i) {
    if (inputs[i] < s.inputs_per_party[i]) {
      ++inputs[i];
      return true;
    }
    inputs[i] = 1;
  }
  return false;
}

bool next_joint_output(std::vector<int>& outputs, int limit) {
  for (int i = static_cast<int>(outputs.size()) - 1; i >= 0; --i) {
    if (outputs[i] < limit - 1) {
      ++outputs[i];
      return true;
    }
    outputs[i] = 0;
  }
  return false;
}

}  // namespace bellbound
