# Fairness metrics package marker.
