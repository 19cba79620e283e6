#ifndef IWAHORI_HPP
#define IWAHORI_HPP

#include "iwahori/coeff.hpp"
#include "iwahori/element.hpp"
#include "iwahori/error.hpp"
#include "iwahori/io.hpp"
#include "iwahori/oracle.hpp"
#include "iwahori/poly.hpp"
#include "iwahori/presets.hpp"
#include "iwahori/product.hpp"
#include "iwahori/series.hpp"
#include "iwahori/suites.hpp"

#endif // IWAHORI_HPP
