import os
import shutil
import subprocess
import sys

print("Working directory:", os.getcwd())

# Clean previous build output
for folder in ("build", "dist"):
    if os.path.exists(folder):
        shutil.rmtree(folder)

pyinstaller_cmd = [
    sys.executable, "-m", "PyInstaller",
    "--clean",
    "--noconfirm",
    "--onefile",
    "--console",
    "--name", "golden-orders",
    "run.py",
]

print("\nCommand:", " ".join(pyinstaller_cmd))
result = subprocess.run(pyinstaller_cmd)

if result.returncode == 0:
    print("\nBuild finished. The executable is in the dist folder.")
sys.exit(result.returncode)
