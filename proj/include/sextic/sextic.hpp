#pragma once

#include "sextic/closed_form.hpp"
#include "sextic/complex.hpp"
#include "sextic/martinelli.hpp"
#include "sextic/milanez.hpp"
#include "sextic/polynomial.hpp"
#include "sextic/roots.hpp"
