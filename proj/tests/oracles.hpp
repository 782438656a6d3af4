#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "oracle_core.hpp"

template <>
struct Catch::StringMaker<fseg::FinalSegment> {
  static std::string convert(const fseg::FinalSegment& f) { return fseg::to_string(f); }
};

template <>
struct Catch::StringMaker<fseg::Word> {
  static std::string convert(const fseg::Word& w) { return fseg::display(w); }
};
