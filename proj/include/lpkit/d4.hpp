#pragma once

#include <string>
#include <vector>

#include "lpkit/parray.hpp"

namespace lpkit {

// The dihedral group of order 8 acting on parameter arrays, generated by the
// three involutions star (*), down (arrow), ddown (double arrow) subject to
// ddown*star = star*down, down*star = star*ddown, down*ddown = ddown*down.
enum class D4Letter { Star, Down, DDown };

using D4Word = std::vector<D4Letter>;

/// CLI syntax: 's' = star, 'd' = down, 'D' = ddown.
D4Word parse_word(const std::string& text);
std::string word_to_string(const D4Word& word);

/// Reduces a word to the canonical normal form star^s down^a ddown^b.
D4Word reduce_word(const D4Word& word);

/// The eight reduced words in a fixed order, identity first.
const std::vector<D4Word>& d4_elements();

/// Letter-by-letter substitution action on a valid parameter array:
///   down:  fixes theta, reverses theta*, varphi_i <-> phi_{d-i+1}
///   ddown: reverses theta, fixes theta*, varphi_i <-> phi_i
///   star:  swaps theta <-> theta*, fixes varphi, reverses phi
/// The image is again valid (asserted).
ParameterArray apply(const ParameterArray& pa, const D4Word& word);

/// All distinct images of pa under the eight group elements, deduplicated,
/// in the order of d4_elements().  Size divides 8 and pa itself is included.
std::vector<ParameterArray> orbit(const ParameterArray& pa);

}  // namespace lpkit
