#ifndef FPX_FPX_HPP
#define FPX_FPX_HPP

#include "fpx/errors.hpp"
#include "fpx/fp.hpp"
#include "fpx/frobenius.hpp"
#include "fpx/io.hpp"
#include "fpx/matrix.hpp"
#include "fpx/multiindex.hpp"
#include "fpx/polymap.hpp"
#include "fpx/polynomial.hpp"
#include "fpx/random.hpp"
#include "fpx/session.hpp"
#include "fpx/verify.hpp"
#include "fpx/wronskian.hpp"

#endif // FPX_FPX_HPP
