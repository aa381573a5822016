def f_gold ( n ) :
    result = 25
    i = 0
    while i < n :
        result += i * 1
        i += 1
    return result
