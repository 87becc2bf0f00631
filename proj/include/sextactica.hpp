#pragma once

#include "sextactica/errors.hpp"
#include "sextactica/field.hpp"
#include "sextactica/projective.hpp"
#include "sextactica/poly.hpp"
#include "sextactica/cayley.hpp"
#include "sextactica/linalg.hpp"
#include "sextactica/conic.hpp"
#include "sextactica/fermat.hpp"
#include "sextactica/parallel.hpp"
#include "sextactica/grouplaw.hpp"
#include "sextactica/oracles.hpp"
#include "sextactica/census.hpp"
#include "sextactica/expected.hpp"
#include "sextactica/session.hpp"
#include "sextactica/report.hpp"
#include "sextactica/emit.hpp"
