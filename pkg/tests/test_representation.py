import math

import numpy as np
import pytest

from twodist import (
    EDGE,
    NON_EDGE,
    Embedding,
    GraphClass,
    NotEuclidean,
    PipelineError,
    RankExcess,
    RepresentationResult,
    SignError,
    SimplexFallback,
    apply := None,  # placeholder removed below
)
