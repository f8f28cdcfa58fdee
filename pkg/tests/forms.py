"""Forms and curves from the worked examples, written as printed."""

from quatforms.binforms import BinaryForm
from quatforms.terforms import TernaryForm

EX1_F = TernaryForm.from_coefficients(2, 4, 24, -2, 0, -2)
EX2_F = TernaryForm.from_coefficients(6, 2, 20, 2, 6, 2)
EX3_F = TernaryForm.from_coefficients(2, 8, 12, -6, -2, 0)
EX4_F = TernaryForm.from_coefficients(4, 6, 8, 4, -2, -2)
EX4_F_ALT = TernaryForm.from_coefficients(18, 6, 4, -2, 4, 14)

EX1_RHO = BinaryForm(7, 4, 48)
EX2_RHO = BinaryForm(11, 6, 111)
EX3_VARRHO = BinaryForm(3, 2, 111)
EX3_RHO = BinaryForm(16, -12, 23)
EX4_RHO = BinaryForm(59, 64, 68)

EX1_TABLE = ["i^2 = -i - 24", "j^2 = -12", "k^2 = -k - 2", "jk = -1 - i", "ki = -2j", "ij = 12(-1 - k)"]
EX2_TABLE = ["i^2 = i - 10", "j^2 = 3j - 30", "k^2 = k - 3", "jk = 3(1 - i)", "ki = 3 - j", "ij = 10(1 - k)"]
EX3_TABLE = ["i^2 = -3i - 24", "j^2 = -j - 6", "k^2 = -4", "jk = -3 - i", "ki = 4(-1 - j)", "ij = -6k"]
EX4_TABLE = ["i^2 = 2i - 12", "j^2 = -j - 8", "k^2 = -k - 6", "jk = 2(2 - i)", "ki = 3(-1 - j)", "ij = 4(-1 - k)"]
