from mstdlab.cli import main

main()
