#pragma once

#include <gcso/analysis.hpp>
#include <gcso/automaton.hpp>
#include <gcso/dot.hpp>
#include <gcso/errors.hpp>
#include <gcso/io.hpp>
#include <gcso/observation.hpp>
#include <gcso/oracle.hpp>
#include <gcso/secret_model.hpp>
#include <gcso/verifier.hpp>
