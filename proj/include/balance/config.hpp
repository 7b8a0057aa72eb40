#pragma once

// Central limits shared by the library and the command line tool.
namespace balance {

// Relation rows are stored as single 64-bit words, so posets are capped here.
inline constexpr int kMaxElements = 64;

// Automorphism / anti-automorphism backtracking is refused above this size.
inline constexpr int kMaxMorphismN = 24;

// Default cap for exhaustive enumeration of isomorphism classes.
inline constexpr int kDefaultMaxSearchN = 8;

// Hard cap that even an explicit override may not exceed.
inline constexpr int kHardMaxSearchN = 10;

// Default cap on the number of linear extensions materialised by
// enumerate_extensions (streaming callers can go beyond it).
inline constexpr long long kEnumerationLimit = 1000000;

}  // namespace balance
