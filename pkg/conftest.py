import os

import hypothesis
import numpy as np

np.seterr(all="warn")

# Diagram searches have uneven running times; per-example deadlines only add flakiness.
hypothesis.settings.register_profile("default", deadline=None, max_examples=40)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=5)
hypothesis.settings.register_profile("thorough", deadline=None, max_examples=300)
hypothesis.settings.register_profile("debugger", deadline=None, report_multiple_bugs=False)
hypothesis.settings.load_profile(os.getenv("QALINK_HYPOTHESIS_PROFILE", "default"))
