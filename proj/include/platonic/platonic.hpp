#ifndef PLATONIC_PLATONIC_HPP
#define PLATONIC_PLATONIC_HPP

#include "platonic/identities.hpp"
#include "platonic/integer.hpp"
#include "platonic/kind.hpp"
#include "platonic/periodicity.hpp"
#include "platonic/pollock.hpp"
#include "platonic/representations.hpp"
#include "platonic/sequences.hpp"

#endif  // PLATONIC_PLATONIC_HPP
