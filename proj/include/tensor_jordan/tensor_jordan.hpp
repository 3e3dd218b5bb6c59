#pragma once

// Jordan types of tensor products J(alpha, s) (x) J(beta, t) in every
// characteristic.

#include "closed_form.hpp"
#include "core.hpp"
#include "delta.hpp"
#include "dispatch.hpp"
#include "field_matrix.hpp"
#include "integer_matrix.hpp"
#include "minors.hpp"
#include "oracle.hpp"
#include "record.hpp"
#include "structure.hpp"
