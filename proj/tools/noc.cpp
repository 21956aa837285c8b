#include <iostream>
int main() { std::cout << "noc placeholder\n"; }
