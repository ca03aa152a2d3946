#ifndef NJORDAN_NJORDAN_HPP
#define NJORDAN_NJORDAN_HPP

#include "freealg.hpp"
#include "blift.hpp"
#include "jordan.hpp"
#include "concrete.hpp"
#include "report.hpp"

#endif // NJORDAN_NJORDAN_HPP
