#pragma once

// Umbrella header.

#include "nilalg/rational.hpp"
#include "nilalg/gamma_poly.hpp"
#include "nilalg/matrix.hpp"
#include "nilalg/row_space.hpp"
#include "nilalg/monomial.hpp"
#include "nilalg/enumerate.hpp"
#include "nilalg/element.hpp"
#include "nilalg/forms.hpp"
#include "nilalg/expression.hpp"
#include "nilalg/fixtures.hpp"
#include "nilalg/consequence.hpp"
#include "nilalg/strings.hpp"
#include "nilalg/model.hpp"
#include "nilalg/report.hpp"
#include "nilalg/verifier.hpp"
