#pragma once

#include <memory>

#include "ffpc/characters.hpp"
#include "ffpc/field.hpp"

namespace ffpc::testing {

inline std::unique_ptr<CharContext> context(std::uint32_t p, std::uint32_t e = 1,
                                            GeneratorChoice choice = GeneratorChoice::Smallest) {
  return std::make_unique<CharContext>(build_field(p, e, choice));
}

}  // namespace ffpc::testing
