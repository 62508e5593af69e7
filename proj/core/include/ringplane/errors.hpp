#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringplane {

// Construction or enumeration refused because a configured bound was exceeded.
// Maps to CLI exit code 3.
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Ring-spec string rejected; position is a byte offset into the input.
// Maps to CLI exit code 2.
struct spec_parse_error : std::runtime_error {
  spec_parse_error(const std::string& what, std::string input, std::size_t position)
      : std::runtime_error(what), input(std::move(input)), position(position) {}
  std::string input;
  std::size_t position;
};

// A structural theorem that holds for all finite rings was contradicted by a
// computation. Must never fire; if it does, the witness is in the message.
struct invariant_error : std::logic_error {
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

// A requested verification came back false (imported tables fail the ring
// axioms, a theorem check found a counterexample). Maps to CLI exit code 1.
struct verification_error : std::runtime_error {
  explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ringplane
