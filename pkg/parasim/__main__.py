from parasim.cli import main

main()
