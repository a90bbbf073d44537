#ifndef GAMMALIB_ELEMENT_HPP
#define GAMMALIB_ELEMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace gammalib {

using Int = std::int64_t;

// An element of a finite abelian group: a tuple of non-negative residues.
// The tuple layout is owned by the group the element belongs to.
using Element = std::vector<Int>;

// Renders "(1,0)".  Used for witnesses and reports; the rendering is the
// stable external form, so keep it minimal.
std::string format_element(const Element& e);

// Renders "{(0,0), (1,1)}" with elements in the given order.
std::string format_element_set(const std::vector<Element>& es);

}  // namespace gammalib

#endif
