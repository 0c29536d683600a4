"""Reference values the certificates are checked against."""
