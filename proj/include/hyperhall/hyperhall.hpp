#ifndef HYPERHALL_HYPERHALL_HPP
#define HYPERHALL_HYPERHALL_HPP

// The mathematical core. The io/ headers are included separately because
// they pull in third-party headers (json.hpp, httplib.h) and OpenSSL.

#include "error.hpp"
#include "element_subset.hpp"
#include "hypergroup.hpp"
#include "closed.hpp"
#include "quotient.hpp"
#include "homomorphism.hpp"
#include "solvable.hpp"
#include "primes.hpp"
#include "group.hpp"
#include "scheme.hpp"
#include "scheme_quotient.hpp"
#include "hall.hpp"

#endif // HYPERHALL_HYPERHALL_HPP
