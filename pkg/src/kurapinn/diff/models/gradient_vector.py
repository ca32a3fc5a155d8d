import numpy as np

# One float64 per trainable parameter, in the order produced by
# kurapinn.net.rules.flatten_params.flatten_params.
GradientVector = np.ndarray
