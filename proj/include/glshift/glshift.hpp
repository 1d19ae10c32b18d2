#pragma once

#include "glshift/classical.hpp"
#include "glshift/io.hpp"
#include "glshift/matrix_calc.hpp"
#include "glshift/pbw.hpp"
#include "glshift/quasideriv.hpp"
#include "glshift/rational.hpp"
#include "glshift/shift_matrix.hpp"
#include "glshift/shift_verify.hpp"
