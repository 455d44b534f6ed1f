#pragma once

#include "besico/arrangement.hpp"
#include "besico/constructions.hpp"
#include "besico/errors.hpp"
#include "besico/finite_field.hpp"
#include "besico/identities.hpp"
#include "besico/probability.hpp"
#include "besico/rational.hpp"
#include "besico/real_bridge.hpp"
#include "besico/sampling.hpp"
