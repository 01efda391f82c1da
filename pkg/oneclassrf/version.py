# This file is maintained by hand; bump on release.
short_version = '0.3.0'
version = '0.3.0'
full_version = '0.3.0'
release = True
